//! The monomial (toric) model `R_H = C[z^h : h in H]` of a Weierstrass
//! curve: standard-basis monomials, their structure constants, binomial
//! relations and the monomial trace element.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Monomial `prod Z_{r_j}^{m_j}` in the generator variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialElement {
    pub exponents: Vec<u64>,
}

impl MonomialElement {
    pub fn unit(m: usize) -> Self {
        MonomialElement { exponents: vec![0; m] }
    }

    /// `sum m_j r_j`.
    pub fn weight(&self, generators: &[u64]) -> u64 {
        self.exponents.iter().zip(generators).map(|(m, r)| m * r).sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn display<'a>(&'a self, generators: &'a [u64]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, generators, prime: false }
    }

    /// Rendering with primed variables (second tensor factor).
    pub fn display_primed<'a>(&'a self, generators: &'a [u64]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, generators, prime: true }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a MonomialElement,
    generators: &'a [u64],
    prime: bool,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.prime { "'" } else { "" };
        let mut any = false;
        for (m, r) in self.mono.exponents.iter().zip(self.generators) {
            if *m == 0 {
                continue;
            }
            if any {
                write!(f, " ")?;
            }
            match m {
                1 => write!(f, "Z{r}{mark}")?,
                _ => write!(f, "Z{r}{mark}^{m}")?,
            }
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The monomial trace element `sum_i z^{d - e_i} (x) z'^{e_i}` and its data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialTraceData {
    pub d_h: u64,
    /// Index with `e[ell] = d_h mod r`.
    pub ell: usize,
    /// `ehat[i] = d_h - e[i]`.
    pub ehat: Vec<u64>,
    /// `delta[i] = (ehat[i] - e_star(ell, i)) / r`.
    pub delta: Vec<u64>,
    /// Left factor `Z_r^{delta_i} Zeta_{e*(ell, i)}` paired with basis index `i`.
    pub monomials: Vec<(MonomialElement, usize)>,
    pub symmetric: bool,
}

impl MonomialTraceData {
    /// Human form such as `Z5^5 + Z5 Z13 Z7' + ...`.
    pub fn render(&self, h: &NumericalSemigroup) -> String {
        let gens = h.generators();
        self.monomials
            .iter()
            .map(|(left, i)| {
                let right = zeta_repr(h, h.e()[*i]).expect("basis element lies in H");
                match (left.total_degree(), right.total_degree()) {
                    (_, 0) => format!("{}", left.display(gens)),
                    (0, _) => format!("{}", right.display_primed(gens)),
                    _ => format!("{} {}", left.display(gens), right.display_primed(gens)),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Violations found by [`cyclic_action_check`]; empty when all relations are
/// eigenvectors of the cyclic action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct CyclicReport {
    pub relations_checked: usize,
    pub trace_monomials_checked: usize,
    pub violations: Vec<String>,
}

/// Exponent vector of weight `e`: minimal total degree, ties broken by the
/// lexicographically greatest vector read from the largest generator down.
pub fn zeta_repr(h: &NumericalSemigroup, e: u64) -> Result<MonomialElement, SemigroupError> {
    if !h.contains(e as i64) {
        return Err(SemigroupError::NotInSemigroup(e as i64));
    }
    let gens = h.generators();
    let m = gens.len();
    // best[k][n]: minimal degree for weight n using generators 0..=k.
    let mut best = vec![vec![u64::MAX; e as usize + 1]; m];
    for k in 0..m {
        best[k][0] = 0;
        for n in 1..=e as usize {
            let mut b = if k > 0 { best[k - 1][n] } else { u64::MAX };
            let g = gens[k] as usize;
            if g <= n && best[k][n - g] != u64::MAX {
                b = b.min(best[k][n - g] + 1);
            }
            best[k][n] = b;
        }
    }
    let mut exps = vec![0u64; m];
    let mut rest = e as usize;
    for k in (0..m).rev() {
        let target = best[k][rest];
        let g = gens[k] as usize;
        // Largest multiplicity of generator k still achieving the optimum.
        let mut chosen = 0;
        let mut c = rest / g;
        loop {
            let rem = rest - c * g;
            let below = if k > 0 {
                best[k - 1][rem]
            } else if rem == 0 {
                0
            } else {
                u64::MAX
            };
            if below != u64::MAX && below + c as u64 == target {
                chosen = c;
                break;
            }
            if c == 0 {
                break;
            }
            c -= 1;
        }
        exps[k] = chosen as u64;
        rest -= chosen * g;
    }
    debug_assert_eq!(rest, 0);
    Ok(MonomialElement { exponents: exps })
}

/// `(k, p)` with `Zeta_i Zeta_j = Z_r^p Zeta_k`.
pub fn structure_b(h: &NumericalSemigroup, i: usize, j: usize) -> Result<(usize, u64), SemigroupError> {
    let e = h.e();
    let r = e.len();
    for idx in [i, j] {
        if idx >= r {
            return Err(SemigroupError::IndexOutOfRange { index: idx, r });
        }
    }
    let sum = e[i] + e[j];
    let k = h.standard_basis().index_of_class(sum as i64);
    Ok((k, (sum - e[k]) / h.r()))
}

/// `(rr_j, rrbar_j)` of the binomial `Z_{r_j}^{rr_j} - Z_r^{rrbar_j}` for the
/// generator with 0-based index `j >= 1`.
pub fn binomial_fhj(h: &NumericalSemigroup, j: usize) -> Result<(u64, u64), SemigroupError> {
    let gens = h.generators();
    if j == 0 || j >= gens.len() {
        return Err(SemigroupError::IndexOutOfRange { index: j, r: gens.len() });
    }
    let g = num::integer::gcd(h.r(), gens[j]);
    Ok((h.r() / g, gens[j] / g))
}

/// Minimal binomial generators of the toric ideal of `H` among relations of
/// weight at most `weight_cap`.
///
/// Each fiber (exponent vectors of one weight) is split into classes
/// connected by moves from lower-weight relations; one binomial joins each
/// extra class to the class of the fiber's preferred vector.
pub fn toric_relations(h: &NumericalSemigroup, weight_cap: u64) -> Vec<(MonomialElement, MonomialElement)> {
    let gens = h.generators();
    let mut fibers: BTreeMap<u64, Vec<Vec<u64>>> = BTreeMap::new();
    enumerate_vectors(gens, weight_cap, &mut Vec::new(), 0, &mut fibers);
    let mut relations: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    for (_, mut fiber) in fibers {
        if fiber.len() < 2 {
            continue;
        }
        // Preferred order: lexicographically greatest from the largest generator.
        fiber.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
        let n = fiber.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for a in 0..n {
            for b in a + 1..n {
                if relations.iter().any(|(u, v)| is_move(&fiber[a], &fiber[b], u, v)) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        for b in 1..n {
            let (r0, rb) = (find(&mut parent, 0), find(&mut parent, b));
            if r0 != rb {
                relations.push(orient(fiber[0].clone(), fiber[b].clone()));
                parent[rb] = r0;
            }
        }
    }
    relations.into_iter().map(|(u, v)| (MonomialElement { exponents: u }, MonomialElement { exponents: v })).collect()
}

/// Puts the side with the smaller power of `Z_r` first (the preferred
/// vector on ties), matching the usual `Z_a^p - Z_r^q ...` presentation.
fn orient(a: Vec<u64>, b: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
    if b[0] < a[0] {
        (b, a)
    } else {
        (a, b)
    }
}

/// Whether `a - b = u - v` with the common part of `(a, b)` a monomial
/// multiple, i.e. `a = m u, b = m v` or the reverse.
fn is_move(a: &[u64], b: &[u64], u: &[u64], v: &[u64]) -> bool {
    let fits = |x: &[u64], y: &[u64], p: &[u64], q: &[u64]| {
        x.iter().zip(p).all(|(xi, pi)| xi >= pi)
            && y.iter().zip(q).all(|(yi, qi)| yi >= qi)
            && x.iter().zip(p).zip(y.iter().zip(q)).all(|((xi, pi), (yi, qi))| xi - pi == yi - qi)
    };
    fits(a, b, u, v) || fits(a, b, v, u)
}

fn enumerate_vectors(
    gens: &[u64],
    cap: u64,
    prefix: &mut Vec<u64>,
    weight: u64,
    out: &mut BTreeMap<u64, Vec<Vec<u64>>>,
) {
    if prefix.len() == gens.len() {
        out.entry(weight).or_default().push(prefix.clone());
        return;
    }
    let g = gens[prefix.len()];
    let mut k = 0;
    while weight + k * g <= cap {
        prefix.push(k);
        enumerate_vectors(gens, cap, prefix, weight + k * g, out);
        prefix.pop();
        k += 1;
    }
}

/// For three generators (not a complete intersection) every minimal
/// relation has one pure-power side `Z_i^{c_i}` with `c_i` minimal such that
/// `c_i r_i` lies in the semigroup of the other two; returns those `c_i`.
pub fn herzog_exponents(h: &NumericalSemigroup) -> Option<[u64; 3]> {
    let gens = h.generators();
    if gens.len() != 3 {
        return None;
    }
    let mut out = [0; 3];
    for i in 0..3 {
        let others: Vec<u64> = (0..3).filter(|&j| j != i).map(|j| gens[j]).collect();
        let in_others = |n: u64| (0..=n / others[0]).any(|a| (n - a * others[0]) % others[1] == 0);
        out[i] = (1..).find(|&c| in_others(c * gens[i])).expect("some multiple is representable");
    }
    Some(out)
}

/// The monomial trace element of degree `d`.
pub fn trace_monomials(h: &NumericalSemigroup, d: u64) -> Result<MonomialTraceData, SemigroupError> {
    if !h.is_valid_trace_degree(d) {
        return Err(SemigroupError::InvalidTraceDegree(d));
    }
    let e = h.e();
    let r = h.r();
    let ell = h.standard_basis().index_of_class(d as i64);
    let ehat: Vec<u64> = e.iter().map(|&ei| d - ei).collect();
    let mut delta = Vec::with_capacity(e.len());
    let mut monomials = Vec::with_capacity(e.len());
    for i in 0..e.len() {
        let es = h.e_star(ell, i)?;
        let di = (ehat[i] - es) / r;
        let mut left = zeta_repr(h, es)?;
        left.exponents[0] += di;
        delta.push(di);
        monomials.push((left, i));
    }
    Ok(MonomialTraceData { d_h: d, ell, ehat, delta, monomials, symmetric: h.is_symmetric() })
}

/// Checks that every toric relation and every trace monomial is an
/// eigenvector of `Z_a -> zeta^a Z_a` (`zeta` a primitive `r`-th root of
/// unity), i.e. both sides of each relation and all trace monomials share
/// one residue of the weight modulo `r`.
pub fn cyclic_action_check(
    h: &NumericalSemigroup,
    relations: &[(MonomialElement, MonomialElement)],
    trace: Option<&MonomialTraceData>,
) -> CyclicReport {
    let gens = h.generators();
    let r = h.r();
    let mut report = CyclicReport { relations_checked: relations.len(), ..Default::default() };
    for (u, v) in relations {
        if u.weight(gens) % r != v.weight(gens) % r {
            report.violations.push(format!("{} - {}", u.display(gens), v.display(gens)));
        }
    }
    if let Some(t) = trace {
        report.trace_monomials_checked = t.monomials.len();
        let e = h.e();
        for (left, i) in &t.monomials {
            if (left.weight(gens) + e[*i]) % r != t.d_h % r {
                report.violations.push(format!("trace monomial {} (x) e_{i}", left.display(gens)));
            }
        }
    }
    report
}

/// Checks `(z^a (x) 1 - 1 (x) z^a) sum_i z^{d-e_i} (x) z'^{e_i} = 0` for every
/// generator `a`, reducing `z^u (x) z^v` to the normal form
/// `(class u, class v, total power of z^r)`.
pub fn monomial_annihilator_holds(h: &NumericalSemigroup, d: u64) -> bool {
    if !h.is_valid_trace_degree(d) {
        return false;
    }
    let e = h.e();
    let r = h.r();
    let basis = h.standard_basis();
    let key = |u: u64, v: u64| -> (usize, usize, u64) {
        let (cu, cv) = (basis.index_of_class(u as i64), basis.index_of_class(v as i64));
        (cu, cv, (u - e[cu]) / r + (v - e[cv]) / r)
    };
    h.generators().iter().all(|&a| {
        let mut acc: BTreeMap<(usize, usize, u64), i64> = BTreeMap::new();
        for &ei in e {
            *acc.entry(key(d - ei + a, ei)).or_default() += 1;
            *acc.entry(key(d - ei, ei + a)).or_default() -= 1;
        }
        acc.values().all(|&c| c == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn mono(v: &[u64]) -> MonomialElement {
        MonomialElement { exponents: v.to_vec() }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_repr(&h(&[5, 7, 11]), 18).unwrap(), mono(&[0, 1, 1]));
        assert_eq!(zeta_repr(&h(&[5, 7, 11]), 0).unwrap(), mono(&[0, 0, 0]));
        assert_eq!(zeta_repr(&h(&[4, 6, 7, 9]), 13).unwrap(), mono(&[1, 0, 0, 1]));
        assert_eq!(zeta_repr(&h(&[5, 7, 11]), 13), Err(SemigroupError::NotInSemigroup(13)));
    }

    #[test]
    fn structure_examples() {
        let s = h(&[3, 7, 8]);
        assert_eq!(structure_b(&s, 1, 2), Ok((0, 5)));
        assert_eq!(structure_b(&s, 0, 2), Ok((2, 0)));
        assert_eq!(structure_b(&h(&[5, 7, 11]), 1, 1), Ok((3, 0)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_fhj(&h(&[3, 7, 8]), 1), Ok((3, 7)));
        let s = h(&[6, 13, 14, 15, 16]);
        assert_eq!(binomial_fhj(&s, 3), Ok((2, 5)));
        assert_eq!(binomial_fhj(&s, 2), Ok((3, 7)));
    }

    #[test]
    fn toric_examples() {
        let s = h(&[3, 7, 8]);
        let rel = toric_relations(&s, 16);
        assert_eq!(rel.len(), 3);
        for (u, v) in [
            (mono(&[0, 1, 1]), mono(&[5, 0, 0])),
            (mono(&[0, 2, 0]), mono(&[2, 0, 1])),
            (mono(&[0, 0, 2]), mono(&[3, 1, 0])),
        ] {
            assert!(rel.contains(&(u, v)));
        }
        assert_eq!(toric_relations(&h(&[2, 3]), 12), vec![(mono(&[0, 2]), mono(&[3, 0]))]);
        let p = toric_relations(&h(&[5, 7, 11]), 30);
        assert!(p.contains(&(mono(&[0, 3, 0]), mono(&[2, 0, 1]))));
        assert!(p.contains(&(mono(&[0, 0, 2]), mono(&[3, 1, 0]))));
        assert!(p.contains(&(mono(&[0, 2, 1]), mono(&[5, 0, 0]))));
    }

    #[test]
    fn herzog_for_378() {
        assert_eq!(herzog_exponents(&h(&[3, 7, 8])), Some([5, 2, 2]));
    }

    #[test]
    fn trace_tables() {
        let t = trace_monomials(&h(&[4, 6, 7, 9]), 13).unwrap();
        assert_eq!(t.ehat, vec![13, 7, 6, 4]);
        let s = h(&[5, 7, 11, 13]);
        let t = trace_monomials(&s, 25).unwrap();
        assert_eq!(t.render(&s), "Z5^5 + Z5 Z13 Z7' + Z7^2 Z11' + Z5 Z7 Z13' + Z11 Z7'^2");
        let t = trace_monomials(&h(&[6, 13, 14, 15, 16]), 29).unwrap();
        assert_eq!(t.ehat, vec![29, 16, 15, 14, 13, 0]);
        assert_eq!(trace_monomials(&s, 23), Err(SemigroupError::InvalidTraceDegree(23)));
    }

    #[test]
    fn cyclic_and_annihilator() {
        let s = h(&[3, 7, 8]);
        let rel = toric_relations(&s, 24);
        let t = trace_monomials(&s, 14).unwrap();
        assert!(cyclic_action_check(&s, &rel, Some(&t)).violations.is_empty());
        assert!(monomial_annihilator_holds(&s, 14));
    }
}
