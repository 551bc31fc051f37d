//! Numerical semigroups `H = <r_1, ..., r_m>`: membership, gaps, the standard
//! basis modulo the smallest generator, Schubert/Young data and the degrees
//! admissible for a monomial trace element.

use num::integer::gcd;
use serde::Serialize;

/// Largest sieve length accepted before giving up.
const SIEVE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0} != 1, so the complement is infinite")]
    GcdNotOne(u64),
    #[error("generating set is not minimal; redundant generators: {0:?}")]
    RedundantGenerators(Vec<u64>),
    #[error("index {index} out of range for r = {r}")]
    IndexOutOfRange { index: usize, r: usize },
    #[error("{s} is not coprime to r = {r}")]
    NotCoprime { r: u64, s: u64 },
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("{0} is not a valid trace degree")]
    InvalidTraceDegree(u64),
    #[error("semigroup too large to sieve (conductor beyond {SIEVE_LIMIT})")]
    TooLarge,
}

/// Minimal elements of `H` in each residue class modulo `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardBasis {
    /// Sorted ascending, `e[0] = 0`.
    pub e: Vec<u64>,
    /// Residue class mod `r` to index into `e`.
    pub class_of: Vec<usize>,
    /// Residue class mod `r` to the minimal element of `H` in that class.
    pub tilde: Vec<u64>,
}

impl StandardBasis {
    pub fn r(&self) -> usize {
        self.e.len()
    }

    /// Index of the basis element congruent to `n` modulo `r`.
    pub fn index_of_class(&self, n: i64) -> usize {
        let r = self.e.len() as i64;
        self.class_of[n.rem_euclid(r) as usize]
    }
}

/// A numerical semigroup given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    members: Vec<bool>,
    basis: StandardBasis,
}

/// JSON-friendly summary of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub genus: usize,
    pub conductor: u64,
    pub standard_basis: Vec<u64>,
    pub schubert: Vec<u64>,
    pub young: Vec<u64>,
    pub symmetric: bool,
}

impl NumericalSemigroup {
    /// Builds `H` from a minimal generating set (any order, duplicates
    /// ignored). Non-minimal sets are rejected and the redundant members
    /// reported, see [`NumericalSemigroup::minimize`].
    pub fn new(generators: &[u64]) -> Result<Self, SemigroupError> {
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens[0] == 0 {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let redundant = redundant_generators(&gens);
        if !redundant.is_empty() {
            return Err(SemigroupError::RedundantGenerators(redundant));
        }
        let r = gens[0];
        let max_gen = *gens.last().expect("nonempty");
        // Sieve until r consecutive members appear; everything after is in H.
        let mut members: Vec<bool> = vec![true];
        let mut run = 1u64;
        let mut run_start = 0u64;
        while run < r {
            let n = members.len() as u64;
            if n > SIEVE_LIMIT {
                return Err(SemigroupError::TooLarge);
            }
            let m = gens.iter().any(|&g| g <= n && members[(n - g) as usize]);
            members.push(m);
            if m {
                run += 1;
            } else {
                run = 0;
                run_start = n + 1;
            }
        }
        let conductor = run_start;
        let upto = conductor + max_gen;
        while (members.len() as u64) <= upto {
            members.push(true);
        }
        let gaps: Vec<u64> = (0..conductor).filter(|&n| !members[n as usize]).collect();
        let mut tilde = vec![u64::MAX; r as usize];
        for n in 0..members.len() as u64 {
            if members[n as usize] && tilde[(n % r) as usize] == u64::MAX {
                tilde[(n % r) as usize] = n;
            }
        }
        let mut e = tilde.clone();
        e.sort_unstable();
        let mut class_of = vec![0; r as usize];
        for (i, &v) in e.iter().enumerate() {
            class_of[(v % r) as usize] = i;
        }
        Ok(NumericalSemigroup {
            generators: gens,
            gaps,
            conductor,
            members,
            basis: StandardBasis { e, class_of, tilde },
        })
    }

    /// Reduces any generating set with gcd 1 to the minimal one.
    pub fn minimize(generators: &[u64]) -> Vec<u64> {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let redundant = redundant_generators(&gens);
        gens.retain(|g| !redundant.contains(g));
        gens
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest generator.
    pub fn r(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn m(&self) -> usize {
        self.generators.len()
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.conductor || self.members[n as usize]
    }

    /// `N(i)`: the `i`-th element of `H` (0-based, `N(0) = 0`).
    pub fn element(&self, i: usize) -> u64 {
        let below = (0..self.conductor).filter(|&n| self.members[n as usize]).count();
        if i < below {
            (0..self.conductor).filter(|&n| self.members[n as usize]).nth(i).expect("counted")
        } else {
            self.conductor + (i - below) as u64
        }
    }

    /// `N^c(i)`: the `i`-th gap (0-based).
    pub fn gap(&self, i: usize) -> Option<u64> {
        self.gaps.get(i).copied()
    }

    /// Apéry set `{s in H : s - n not in H}`, sorted.
    pub fn apery(&self, n: u64) -> Vec<u64> {
        (0..=self.conductor + n).filter(|&s| self.contains(s as i64) && !self.contains(s as i64 - n as i64)).collect()
    }

    pub fn standard_basis(&self) -> &StandardBasis {
        &self.basis
    }

    /// Shorthand for the sorted standard basis values.
    pub fn e(&self) -> &[u64] {
        &self.basis.e
    }

    /// The basis element congruent to `e[ell] - e[i]` modulo `r`.
    pub fn e_star(&self, ell: usize, i: usize) -> Result<u64, SemigroupError> {
        let r = self.basis.r();
        for idx in [ell, i] {
            if idx >= r {
                return Err(SemigroupError::IndexOutOfRange { index: idx, r });
            }
        }
        let diff = self.basis.e[ell] as i64 - self.basis.e[i] as i64;
        Ok(self.basis.e[self.basis.index_of_class(diff)])
    }

    /// `alpha_i = N^c(i) - i - 1` for `i = 0..g`.
    pub fn schubert_index(&self) -> Vec<u64> {
        self.gaps.iter().enumerate().map(|(i, &c)| c - i as u64 - 1).collect()
    }

    /// Row lengths `alpha_i + 1`, weakly increasing.
    pub fn young_diagram(&self) -> Vec<u64> {
        self.schubert_index().iter().map(|a| a + 1).collect()
    }

    /// `2g - 1` is a gap (equivalently the conductor is `2g`).
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.genus() as u64
    }

    /// Minimal positive `i_s` with `i_s s = 1 mod r`, and `i_r = (i_s s - 1)/r`.
    pub fn bezout_pair(&self, s: u64) -> Result<(u64, u64), SemigroupError> {
        bezout_pair(self.r(), s)
    }

    /// `e[i] - k r`; the positive values over all `(i, k >= 1)` are the gaps.
    pub fn gap_from_basis(&self, i: usize, k: u64) -> Result<i64, SemigroupError> {
        let e = self.basis.e.get(i).ok_or(SemigroupError::IndexOutOfRange { index: i, r: self.basis.r() })?;
        Ok(*e as i64 - (k * self.r()) as i64)
    }

    /// Whether `d - e_i` lies in `H` for every basis element.
    pub fn is_valid_trace_degree(&self, d: u64) -> bool {
        self.basis.e.iter().all(|&e| self.contains(d as i64 - e as i64))
    }

    /// All valid trace degrees `d <= limit`, ascending.
    pub fn valid_trace_degrees(&self, limit: u64) -> Vec<u64> {
        (0..=limit).filter(|&d| self.is_valid_trace_degree(d)).collect()
    }

    /// Least valid trace degree; at most `e[r-1] + conductor`.
    pub fn minimal_valid_trace_degree(&self) -> u64 {
        let bound = self.basis.e.last().expect("nonempty") + self.conductor;
        (0..=bound).find(|&d| self.is_valid_trace_degree(d)).expect("e[r-1] + conductor is always valid")
    }

    pub fn report(&self) -> SemigroupReport {
        SemigroupReport {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            genus: self.genus(),
            conductor: self.conductor,
            standard_basis: self.basis.e.clone(),
            schubert: self.schubert_index(),
            young: self.young_diagram(),
            symmetric: self.is_symmetric(),
        }
    }
}

/// `(i_s, i_r)` with `i_s s - i_r r = 1` and `i_s` minimal positive.
pub fn bezout_pair(r: u64, s: u64) -> Result<(u64, u64), SemigroupError> {
    if gcd(r, s) != 1 {
        return Err(SemigroupError::NotCoprime { r, s });
    }
    let i_s = (1..=r).find(|&i| (i * s) % r == 1 % r).expect("inverse exists for coprime r, s");
    Ok((i_s, (i_s * s - 1) / r))
}

/// Members of a sorted generator list that lie in the semigroup generated by
/// the smaller ones.
fn redundant_generators(sorted: &[u64]) -> Vec<u64> {
    let Some(&max) = sorted.last() else { return Vec::new() };
    let mut out = Vec::new();
    for (k, &g) in sorted.iter().enumerate() {
        let smaller = &sorted[..k];
        if smaller.is_empty() {
            continue;
        }
        let mut reach = vec![false; (max + 1) as usize];
        reach[0] = true;
        for n in 1..=g as usize {
            reach[n] = smaller.iter().any(|&h| h as usize <= n && reach[n - h as usize]);
        }
        if reach[g as usize] {
            out.push(g);
        }
    }
    out
}
