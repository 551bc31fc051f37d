//! The affine coordinate ring `R_X` of a Weierstrass curve as a free module
//! of rank `r` over `Q[x]`, with basis `y_i` indexed by the standard basis
//! `e_i` of the semigroup, and everything computed from it: minimal
//! polynomials, the trace element, the complementary module and the
//! differentials.

mod differentials;
mod expansion;
mod fixtures;
mod trace;

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::exactalg::{fmt_rat, rat, solve_linear, AlgError, Poly, PolyMatrix, Rat};
use crate::monomial;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub use differentials::{DifferentialBasis, DifferentialEntry};
pub use expansion::{InfinityExpansion, NuExpansion};
pub use fixtures::{fixture, fixture_names, FixtureParams};
pub use trace::{ComplementaryModule, InvariantsReport, TraceKit, YhatMode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("degree bound violated: {0}")]
    DegreeBoundViolated(String),
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("invalid multiplication table ({kind}) at indices {indices:?}")]
    TableInvalid { kind: TableDefect, indices: Vec<usize> },
    #[error("branch parameters must be pairwise distinct")]
    DuplicateBranchParam,
    #[error("fixture {name} needs {expected} parameters named {param}, got {got}")]
    ParamCount { name: String, param: String, expected: usize, got: usize },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("minimal polynomial anomaly: {0}")]
    DegreeAnomaly(String),
    #[error("no annihilator solution up to degree {0}")]
    NoSolutionBelowCap(u64),
    #[error("trace does not clear denominators: {0}")]
    NonPolynomialTrace(String),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}

/// Which structural property of a multiplication table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableDefect {
    Shape,
    Unit,
    Symmetry,
    Weight,
    Associativity,
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableDefect::Shape => "shape",
            TableDefect::Unit => "unit",
            TableDefect::Symmetry => "symmetry",
            TableDefect::Weight => "weight",
            TableDefect::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// Element `sum_i c_i(x) y_i` of `R_X`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AlgebraElement {
    pub coeffs: Vec<Poly>,
}

impl AlgebraElement {
    pub fn zero(r: usize) -> Self {
        AlgebraElement { coeffs: vec![Poly::zero(); r] }
    }

    pub fn basis(r: usize, i: usize) -> Self {
        let mut v = AlgebraElement::zero(r);
        v.coeffs[i] = Poly::one();
        v
    }

    /// `p(x) * y_i`.
    pub fn term(r: usize, i: usize, p: Poly) -> Self {
        let mut v = AlgebraElement::zero(r);
        v.coeffs[i] = p;
        v
    }

    pub fn from_poly(r: usize, p: Poly) -> Self {
        AlgebraElement::term(r, 0, p)
    }

    pub fn r(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale_poly(&self, p: &Poly) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a * p).collect() }
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }
}

/// Element `sum_{i,j} h_ij(x) y_i (x) y_j` of `R_X (x)_{Q[x]} R_X`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TensorElement {
    pub entries: Vec<Vec<Poly>>,
}

impl TensorElement {
    pub fn zero(r: usize) -> Self {
        TensorElement { entries: vec![vec![Poly::zero(); r]; r] }
    }

    /// `a (x) b`.
    pub fn outer(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        TensorElement { entries: a.coeffs.iter().map(|p| b.coeffs.iter().map(|q| p * q).collect()).collect() }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        TensorElement {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p + q).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TensorElement {
        TensorElement { entries: self.entries.iter().map(|row| row.iter().map(|p| p.scale(c)).collect()).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.entries.len();
        (0..r).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn matrix(&self) -> PolyMatrix {
        PolyMatrix::from_rows(self.entries.clone())
    }

    /// Column `j` as an element: the left factor paired with `y_j`.
    pub fn column(&self, j: usize) -> AlgebraElement {
        AlgebraElement { coeffs: self.entries.iter().map(|row| row[j].clone()).collect() }
    }
}

/// Monic minimal polynomial `T^n + A_1 T^(n-1) + ... + A_n` of a generator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MinimalPolynomial {
    /// The generator value `r_j`.
    pub generator: u64,
    /// `A_0 = 1, A_1, ..., A_n`.
    pub a: Vec<Poly>,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    /// Coefficients low-to-high in `T`.
    pub fn coeffs_low_to_high(&self) -> Vec<Poly> {
        self.a.iter().rev().cloned().collect()
    }
}

/// `R_X` presented by a validated multiplication table.
#[derive(Clone, Debug)]
pub struct CurveAlgebra {
    semigroup: NumericalSemigroup,
    table: Vec<Vec<AlgebraElement>>,
    gen_index: Vec<(u64, usize)>,
    params: BTreeMap<String, Rat>,
    names: Vec<String>,
    basis_traces: Vec<Poly>,
    plane: Option<Vec<Poly>>,
}

impl CurveAlgebra {
    /// Validates a multiplication table `table[i][j] = y_i y_j`.
    ///
    /// Checks shape, unit row, symmetry, the weight filtration (whose top
    /// terms are the monomial structure constants) and associativity,
    /// reporting the first failing indices.
    pub fn from_table(
        semigroup: NumericalSemigroup,
        table: Vec<Vec<AlgebraElement>>,
        params: BTreeMap<String, Rat>,
        names: Option<Vec<String>>,
    ) -> Result<Self, CurveError> {
        let e = semigroup.e().to_vec();
        let r = e.len();
        let bad = |kind, indices: Vec<usize>| CurveError::TableInvalid { kind, indices };
        if table.len() != r || table.iter().any(|row| row.len() != r || row.iter().any(|v| v.r() != r)) {
            return Err(bad(TableDefect::Shape, vec![]));
        }
        for j in 0..r {
            let unit = AlgebraElement::basis(r, j);
            if table[0][j] != unit || table[j][0] != unit {
                return Err(bad(TableDefect::Unit, vec![0, j]));
            }
        }
        for i in 0..r {
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return Err(bad(TableDefect::Symmetry, vec![i, j]));
                }
            }
        }
        let rr = semigroup.r() as i64;
        for i in 0..r {
            for j in i..r {
                let (kstar, p) = monomial::structure_b(&semigroup, i, j)?;
                let top = (e[i] + e[j]) as i64;
                for k in 0..r {
                    let c = &table[i][j].coeffs[k];
                    let ok = if k == kstar {
                        c.deg_i64() == p as i64
                    } else {
                        c.is_zero() || rr * c.deg_i64() + (e[k] as i64) < top
                    };
                    if !ok {
                        return Err(bad(TableDefect::Weight, vec![i, j, k]));
                    }
                }
            }
        }
        let names = names.unwrap_or_else(|| default_names(&semigroup));
        let mut alg = CurveAlgebra {
            gen_index: gen_index(&semigroup),
            semigroup,
            table,
            params,
            names,
            basis_traces: Vec::new(),
            plane: None,
        };
        for i in 1..r {
            for j in i..r {
                for k in j..r {
                    let b = |n: usize| AlgebraElement::basis(r, n);
                    let left = alg.mult(&alg.mult(&b(i), &b(j)), &b(k));
                    let right = alg.mult(&b(i), &alg.mult(&b(j), &b(k)));
                    if left != right {
                        return Err(bad(TableDefect::Associativity, vec![i, j, k]));
                    }
                }
            }
        }
        alg.basis_traces =
            (0..r).map(|i| (0..r).fold(Poly::zero(), |acc, j| &acc + &alg.table[i][j].coeffs[j])).collect();
        Ok(alg)
    }

    /// The plane curve `y^r + A_1 y^(r-1) + ... + A_r = 0` with basis `y^i`.
    ///
    /// Requires `gcd(r, s) = 1`, `deg A_i <= floor(i s / r)`, and
    /// `A_r = -x^s + (lower)`. These force the top weighted-homogeneous part
    /// to be `y^r - x^s`, which is irreducible for coprime `(r, s)`, so the
    /// curve is irreducible.
    pub fn from_plane(r: u64, s: u64, a: Vec<Poly>) -> Result<Self, CurveError> {
        if num::integer::gcd(r, s) != 1 {
            return Err(SemigroupError::NotCoprime { r, s }.into());
        }
        if a.len() != r as usize {
            return Err(CurveError::DegreeBoundViolated(format!(
                "expected {r} coefficients A_1..A_r, got {}",
                a.len()
            )));
        }
        for (idx, ai) in a.iter().enumerate() {
            let i = idx as u64 + 1;
            if ai.deg_i64() > ((i * s) / r) as i64 {
                return Err(CurveError::DegreeBoundViolated(format!("deg A_{i} = {} > {}", ai.deg_i64(), (i * s) / r)));
            }
        }
        let ar = &a[r as usize - 1];
        if ar.deg_i64() != s as i64 || ar.coeff(s as usize) != -Rat::one() {
            return Err(CurveError::DegreeBoundViolated(format!("A_{r} must be -x^{s} + lower terms")));
        }
        let semigroup = NumericalSemigroup::new(&if r == 1 { vec![1] } else { vec![r, s] })?;
        let n = r as usize;
        // powers[k] = y^k for k < 2r - 1, reduced by y^r = -sum A_l y^(r-l).
        let mut powers = vec![AlgebraElement::basis(n, 0)];
        for k in 1..(2 * n - 1) {
            let prev = &powers[k - 1];
            let mut next = AlgebraElement::zero(n);
            for i in 0..n {
                if prev.coeffs[i].is_zero() {
                    continue;
                }
                if i + 1 < n {
                    next.coeffs[i + 1] += &prev.coeffs[i];
                } else {
                    for (l, al) in a.iter().enumerate() {
                        next.coeffs[n - 1 - l] -= &(&prev.coeffs[i] * al);
                    }
                }
            }
            powers.push(next);
        }
        let table = (0..n).map(|i| (0..n).map(|j| powers[i + j].clone()).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            })
            .collect();
        let mut alg = CurveAlgebra::from_table(semigroup, table, BTreeMap::new(), Some(names))?;
        alg.plane = Some(a);
        Ok(alg)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn r(&self) -> usize {
        self.table.len()
    }

    pub fn e(&self) -> &[u64] {
        self.semigroup.e()
    }

    pub fn table(&self) -> &[Vec<AlgebraElement>] {
        &self.table
    }

    /// `(r_j, basis index of y_{r_j})` for every generator but the smallest.
    pub fn gen_index(&self) -> &[(u64, usize)] {
        &self.gen_index
    }

    pub fn params(&self) -> &BTreeMap<String, Rat> {
        &self.params
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `A_1..A_r` when the algebra came from a plane equation.
    pub fn plane_coefficients(&self) -> Option<&[Poly]> {
        self.plane.as_deref()
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::basis(self.r(), 0)
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.r(), i)
    }

    pub fn mult(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let r = self.r();
        let mut out = AlgebraElement::zero(r);
        for i in 0..r {
            if u.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if v.coeffs[j].is_zero() {
                    continue;
                }
                let c = &u.coeffs[i] * &v.coeffs[j];
                for (k, a) in self.table[i][j].coeffs.iter().enumerate() {
                    if !a.is_zero() {
                        out.coeffs[k] += &(&c * a);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, v: &AlgebraElement, e: u32) -> AlgebraElement {
        (0..e).fold(self.one(), |acc, _| self.mult(&acc, v))
    }

    /// Matrix of multiplication by `v`: column `j` holds `v y_j`.
    pub fn mult_matrix(&self, v: &AlgebraElement) -> PolyMatrix {
        let r = self.r();
        let mut m = PolyMatrix::zeros(r, r);
        for j in 0..r {
            let col = self.mult(v, &self.basis(j));
            for (k, c) in col.coeffs.into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Trace of multiplication by `v` over `Q[x]`.
    pub fn std_trace(&self, v: &AlgebraElement) -> Poly {
        v.coeffs.iter().zip(&self.basis_traces).fold(Poly::zero(), |acc, (c, t)| &acc + &(c * t))
    }

    /// `T_ij = std_trace(y_i y_j)`.
    pub fn trace_form(&self) -> PolyMatrix {
        let r = self.r();
        PolyMatrix::from_rows((0..r).map(|i| (0..r).map(|j| self.std_trace(&self.table[i][j])).collect()).collect())
    }

    /// Sato-Weierstrass weight `-max_i (r deg v_i + e_i)`; `None` for zero.
    pub fn sato_weight(&self, v: &AlgebraElement) -> Option<i64> {
        let r = self.semigroup.r() as i64;
        v.coeffs
            .iter()
            .zip(self.e())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &e)| r * c.deg_i64() + e as i64)
            .max()
            .map(|w| -w)
    }

    /// Index of the leading term (highest pole order) of a nonzero element.
    pub fn leading_index(&self, v: &AlgebraElement) -> Option<usize> {
        let r = self.semigroup.r() as i64;
        (0..self.r())
            .filter(|&i| !v.coeffs[i].is_zero())
            .max_by_key(|&i| r * v.coeffs[i].deg_i64() + self.e()[i] as i64)
    }

    /// Basis index of the generator with 0-based index `j >= 1`.
    fn generator_basis_index(&self, j: usize) -> Result<usize, CurveError> {
        self.gen_index
            .get(j.wrapping_sub(1))
            .map(|(_, idx)| *idx)
            .ok_or(SemigroupError::IndexOutOfRange { index: j, r: self.semigroup.m() }.into())
    }

    /// Monic minimal polynomial over `Q[x]` of the generator with 0-based
    /// index `j >= 1`, of degree `rr = r / gcd(r, r_j)`.
    ///
    /// Powers `y^k`, `k < rr`, have pole orders in distinct classes mod `r`,
    /// so no relation of lower degree exists; the relation of degree `rr` is
    /// solved over `Q` with the weight bounds `deg A_i <= floor(i r_j / r)`.
    /// A missing solution means the table is not a curve algebra.
    pub fn minimal_poly_of_generator(&self, j: usize) -> Result<MinimalPolynomial, CurveError> {
        let idx = self.generator_basis_index(j)?;
        let (rr, rrbar) = monomial::binomial_fhj(&self.semigroup, j)?;
        let generator = self.semigroup.generators()[j];
        let n = rr as usize;
        let y = self.basis(idx);
        let mut powers = vec![self.one()];
        for k in 1..=n {
            powers.push(self.mult(&powers[k - 1], &y));
        }
        // Unknown (i, m): coefficient of x^m in A_i, multiplying y^(n - i).
        let unknowns: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (0..=(i as u64 * rrbar / rr) as usize).map(move |m| (i, m))).collect();
        let mut rows: BTreeMap<(usize, usize), (Vec<Rat>, Rat)> = BTreeMap::new();
        let width = unknowns.len();
        for (k, p) in powers[n].coeffs.iter().enumerate() {
            for (d, c) in p.coeffs().iter().enumerate() {
                rows.entry((k, d)).or_insert_with(|| (vec![Rat::zero(); width], Rat::zero())).1 -= c;
            }
        }
        for (col, &(i, m)) in unknowns.iter().enumerate() {
            for (k, p) in powers[n - i].coeffs.iter().enumerate() {
                for (d, c) in p.coeffs().iter().enumerate() {
                    rows.entry((k, d + m)).or_insert_with(|| (vec![Rat::zero(); width], Rat::zero())).0[col] += c;
                }
            }
        }
        let (a_rows, b): (Vec<Vec<Rat>>, Vec<Rat>) = rows.into_values().unzip();
        let sol = solve_linear(&a_rows, &b).map_err(|_| {
            CurveError::DegreeAnomaly(format!(
                "y{generator} satisfies no monic relation of degree {rr} within the weight bounds"
            ))
        })?;
        if !sol.nullspace.is_empty() {
            return Err(CurveError::DegreeAnomaly(format!("relation of y{generator} is not unique")));
        }
        let mut coeffs: Vec<Vec<Rat>> = vec![Vec::new(); n + 1];
        coeffs[0] = vec![Rat::one()];
        for (&(i, m), c) in unknowns.iter().zip(sol.particular) {
            if coeffs[i].len() <= m {
                coeffs[i].resize(m + 1, Rat::zero());
            }
            coeffs[i][m] = c;
        }
        Ok(MinimalPolynomial { generator, a: coeffs.into_iter().map(Poly::from_coeffs).collect() })
    }

    /// `(f(Y) - f(y)) / (Y - y)` for the minimal polynomial of generator `j`,
    /// expanded in the `y_i (x) y_j` basis (left factor carries `Y`).
    pub fn divided_difference(&self, j: usize) -> Result<TensorElement, CurveError> {
        let idx = self.generator_basis_index(j)?;
        let f = self.minimal_poly_of_generator(j)?;
        let n = f.degree();
        let y = self.basis(idx);
        let powers: Vec<AlgebraElement> = (0..n).map(|k| self.pow(&y, k as u32)).collect();
        let mut out = TensorElement::zero(self.r());
        for (l, al) in f.a.iter().enumerate().take(n) {
            for i in 0..n - l {
                let t = TensorElement::outer(&powers[i].scale_poly(al), &powers[n - l - 1 - i]);
                out = out.add(&t);
            }
        }
        Ok(out)
    }

    /// `mu(T) = sum h_ij y_i y_j`.
    pub fn mu(&self, t: &TensorElement) -> AlgebraElement {
        let r = self.r();
        let mut out = AlgebraElement::zero(r);
        for i in 0..r {
            for j in 0..r {
                if !t.entries[i][j].is_zero() {
                    out = out.add(&self.table[i][j].scale_poly(&t.entries[i][j]));
                }
            }
        }
        out
    }

    /// Checks `(a (x) 1 - 1 (x) a) T = 0`, i.e. `M_a H = H M_a^T`.
    pub fn annihilates(&self, a: &AlgebraElement, t: &TensorElement) -> bool {
        let m = self.mult_matrix(a);
        let h = t.matrix();
        m.mul(&h) == h.mul(&m.transpose())
    }

    /// Human-readable element such as `x^2 - 1 + 3*y + w`.
    pub fn format_element(&self, v: &AlgebraElement) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let name = &self.names[i];
            let cs = c.to_string();
            let s = if i == 0 {
                cs
            } else if c.is_constant() && c.coeff(0).is_one() {
                name.clone()
            } else if c.is_constant() && c.coeff(0) == -Rat::one() {
                format!("-{name}")
            } else if c.is_constant() {
                format!("{}*{name}", fmt_rat(&c.coeff(0)))
            } else {
                format!("({cs})*{name}")
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }

    /// Top-weight part of `v` as `c * x^a0 * prod y_{r_j}^{a_j}`, using the
    /// monomial chosen by [`monomial::zeta_repr`] for the pole order of `v`.
    /// The flag says whether `v` equals that product exactly.
    pub fn top_weight_monomial(&self, v: &AlgebraElement) -> Option<(Rat, monomial::MonomialElement, bool)> {
        let w = (-self.sato_weight(v)?) as u64;
        let m = monomial::zeta_repr(&self.semigroup, w).ok()?;
        let mut prod = AlgebraElement::from_poly(self.r(), Poly::monomial(Rat::one(), m.exponents[0] as usize));
        for (&(_, idx), &a) in self.gen_index.iter().zip(&m.exponents[1..]) {
            prod = self.mult(&prod, &self.pow(&self.basis(idx), a as u32));
        }
        let i = self.leading_index(v)?;
        if self.leading_index(&prod) != Some(i) || prod.coeffs[i].degree() != v.coeffs[i].degree() {
            return None;
        }
        let c = v.coeffs[i].lc()? / prod.coeffs[i].lc()?;
        let exact = prod.scale(&c) == *v;
        Some((c, m, exact))
    }

    /// A monomial in the generators such as `y^2*w`, with `x` for `r`.
    pub fn format_generator_monomial(&self, m: &monomial::MonomialElement) -> String {
        let mut parts = Vec::new();
        let names =
            std::iter::once("x".to_string()).chain(self.gen_index.iter().map(|&(_, idx)| self.names[idx].clone()));
        for (name, &a) in names.zip(&m.exponents) {
            match a {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{a}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `x^k` times a basis element, as text.
    pub fn format_monomial(&self, k: u64, i: usize) -> String {
        let name = &self.names[i];
        match (k, i) {
            (0, _) => name.clone(),
            (1, 0) => "x".into(),
            (_, 0) => format!("x^{k}"),
            (1, _) => format!("x*{name}"),
            _ => format!("x^{k}*{name}"),
        }
    }
}

/// Basis index of each generator beyond the smallest.
fn gen_index(h: &NumericalSemigroup) -> Vec<(u64, usize)> {
    let basis = h.standard_basis();
    h.generators().iter().skip(1).map(|&g| (g, basis.index_of_class(g as i64))).collect()
}

/// `1, y7, y8, ...`: generators by value, composites as `Y<e>`.
fn default_names(h: &NumericalSemigroup) -> Vec<String> {
    h.e()
        .iter()
        .map(|&e| {
            if e == 0 {
                "1".to_string()
            } else if h.generators().contains(&e) {
                format!("y{e}")
            } else {
                format!("Y{e}")
            }
        })
        .collect()
}

/// Convenience for tests and fixtures: `k(x) = prod (x - b)`.
pub fn roots_poly(roots: &[Rat]) -> Poly {
    Poly::from_roots(roots)
}

/// Convenience: `c` as a constant polynomial.
pub fn const_poly(c: i64) -> Poly {
    if c == 0 {
        Poly::zero()
    } else {
        Poly::constant(rat(c))
    }
}
