//! The trace element `h~` generating `Ann(Ker mu)`, its diagonal `h_X`, the
//! dual family and the complementary module `R_X^c = (1/h_X) span(Y^_i)`.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use super::{AlgebraElement, CurveAlgebra, CurveError, TensorElement};
use crate::exactalg::{rat, solve_linear, Poly, PolyMatrix, Rat};
use crate::monomial;
use crate::semigroup::SemigroupError;

/// Everything derived from the trace element.
#[derive(Clone, Debug, Serialize)]
pub struct TraceKit {
    /// Pole order of `h_X` at infinity.
    pub d_h: u64,
    pub htilde: TensorElement,
    /// `mu(h~)`.
    pub hx: AlgebraElement,
    /// `Y^_j`: column `j` of `h~`, so `h~ = sum_j Y^_j (x) y_j`.
    pub upsilon: Vec<AlgebraElement>,
    /// Generators used for the complementary module (defaults to `upsilon`).
    pub yhat: Vec<AlgebraElement>,
    /// `d_h - 2g - r + 1`.
    pub kx: i64,
    pub ell: usize,
    pub delta: Vec<u64>,
    pub ehat: Vec<u64>,
    /// Leading coefficient of each `delta~_i` (the first is 1 by normalization).
    pub delta_leading: Vec<Rat>,
    #[serde(skip)]
    adj_hx: PolyMatrix,
    #[serde(skip)]
    norm_hx: Poly,
}

/// How [`TraceKit::yhat_family`] chooses generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum YhatMode {
    Upsilon,
    Truncated,
}

/// `R_X^c` as `(1/denominator) * span_{Q[x]}(generators)`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementaryModule {
    pub generators: Vec<AlgebraElement>,
    pub denominator: AlgebraElement,
    /// Whether `1/h_X` alone generates, i.e. `span(generators) = R_X`.
    pub principal: bool,
}

/// Degree identities tied to `d_h`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantsReport {
    pub d_h: u64,
    pub g: u64,
    pub r: u64,
    /// `d_h - 2g - r + 1`.
    pub kx: i64,
    /// `deg N(h_X) - deg det(trace form)`, computed without `g`.
    pub kx_from_norms: i64,
    /// `d_h - kx - r + 1`, expected `2g`.
    pub c_hat: i64,
    /// `e_{r-1} - r + 1`, expected to be the conductor.
    pub c_x: i64,
    pub conductor: u64,
    pub symmetric: bool,
}

impl InvariantsReport {
    /// `(name, holds)` for each identity.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            (
                "kX = d_h - 2g - r + 1 matches deg det h_X - deg det trace_form",
                self.kx >= 0 && self.kx == self.kx_from_norms,
            ),
            ("c^_X = 2g", self.c_hat == 2 * self.g as i64),
            ("c_X = e_{r-1} - r + 1", self.c_x == self.conductor as i64),
            ("c_X = 2g iff symmetric", (self.c_x == 2 * self.g as i64) == self.symmetric),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

impl CurveAlgebra {
    /// Solves for the generator of `Ann(Ker mu)` of least pole order.
    ///
    /// Candidate degrees are the valid trace degrees in ascending order (or
    /// only `dh_override`). At degree `d` the unknowns are the coefficients of
    /// `h_ij` with `deg h_ij <= (d - e_i - e_j)/r`, subject to
    /// `M_a H = H M_a^T` for every generator `a`. The first solution of exact
    /// weight `d` is normalized so that `delta~_0` is monic.
    pub fn annihilator_solve(&self, dh_override: Option<u64>) -> Result<TraceKit, CurveError> {
        let h = self.semigroup();
        let r = self.r() as u64;
        let dmin = h.minimal_valid_trace_degree();
        let cap = dmin + r * (r + 2);
        let candidates: Vec<u64> = match dh_override {
            Some(d) => {
                if !h.is_valid_trace_degree(d) {
                    return Err(SemigroupError::InvalidTraceDegree(d).into());
                }
                vec![d]
            }
            None => (dmin..=cap).filter(|&d| h.is_valid_trace_degree(d)).collect(),
        };
        let mats: Vec<PolyMatrix> =
            self.gen_index().iter().map(|(_, idx)| self.mult_matrix(&self.basis(*idx))).collect();
        for d in candidates {
            if let Some(t) = self.solve_at_degree(d, &mats)? {
                return self.build_kit(d, t);
            }
        }
        Err(CurveError::NoSolutionBelowCap(dh_override.unwrap_or(cap)))
    }

    fn solve_at_degree(&self, d: u64, mats: &[PolyMatrix]) -> Result<Option<TensorElement>, CurveError> {
        let e = self.e();
        let r = self.r();
        let rr = self.semigroup().r();
        let mut unknowns: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..r {
            for j in 0..r {
                if e[i] + e[j] <= d {
                    for k in 0..=((d - e[i] - e[j]) / rr) as usize {
                        unknowns.push((i, j, k));
                    }
                }
            }
        }
        if unknowns.is_empty() {
            return Ok(None);
        }
        // Row key (generator, p, q, degree) -> sparse coefficients.
        let mut rows: BTreeMap<(usize, usize, usize, usize), BTreeMap<usize, Rat>> = BTreeMap::new();
        for (gi, m) in mats.iter().enumerate() {
            for (col, &(i, j, k)) in unknowns.iter().enumerate() {
                // (M H)[p][j] gains M[p][i] x^k; (H M^T)[i][q] gains M[q][j] x^k.
                for p in 0..r {
                    for (deg, c) in m.get(p, i).coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            *rows.entry((gi, p, j, deg + k)).or_default().entry(col).or_insert_with(Rat::zero) += c;
                        }
                    }
                }
                for q in 0..r {
                    for (deg, c) in m.get(q, j).coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            *rows.entry((gi, i, q, deg + k)).or_default().entry(col).or_insert_with(Rat::zero) -= c;
                        }
                    }
                }
            }
        }
        let n = unknowns.len();
        let dense: Vec<Vec<Rat>> = rows
            .into_values()
            .filter(|row| row.values().any(|c| !c.is_zero()))
            .map(|row| {
                let mut v = vec![Rat::zero(); n];
                for (c, val) in row {
                    v[c] = val;
                }
                v
            })
            .collect();
        let zeros = vec![Rat::zero(); dense.len()];
        let sol = solve_linear(&dense, &zeros)?;
        let is_top = |&(i, j, k): &(usize, usize, usize)| rr * k as u64 + e[i] + e[j] == d;
        let pick = sol.nullspace.into_iter().find(|v| unknowns.iter().zip(v).any(|(u, c)| is_top(u) && !c.is_zero()));
        Ok(pick.map(|v| {
            let mut coeffs: Vec<Vec<Vec<Rat>>> = vec![vec![Vec::new(); r]; r];
            for (&(i, j, k), c) in unknowns.iter().zip(v) {
                let slot = &mut coeffs[i][j];
                if slot.len() <= k {
                    slot.resize(k + 1, Rat::zero());
                }
                slot[k] = c;
            }
            TensorElement {
                entries: coeffs.into_iter().map(|row| row.into_iter().map(Poly::from_coeffs).collect()).collect(),
            }
        }))
    }

    fn build_kit(&self, d: u64, t: TensorElement) -> Result<TraceKit, CurveError> {
        let h = self.semigroup();
        let r = self.r();
        let mono = monomial::trace_monomials(h, d)?;
        let ell = mono.ell;
        let delta0 = mono.delta[0] as usize;
        let lead = t.entries[ell][0].coeff(delta0);
        if t.entries[ell][0].deg_i64() != delta0 as i64 || lead.is_zero() {
            return Err(CurveError::IdentityViolation(format!("delta~_0 does not have degree {delta0}")));
        }
        let htilde = t.scale(&lead.recip());
        let hx = self.mu(&htilde);
        let upsilon: Vec<AlgebraElement> = (0..r).map(|j| htilde.column(j)).collect();
        let m_hx = self.mult_matrix(&hx);
        let norm_hx = m_hx.det();
        if norm_hx.is_zero() {
            return Err(CurveError::IdentityViolation("h_X is a zero divisor".into()));
        }
        let adj_hx = m_hx.adjugate();
        let g = h.genus() as i64;
        let delta_leading = (0..r)
            .map(|i| {
                let k = h.standard_basis().index_of_class(mono.ehat[i] as i64);
                upsilon[i].coeffs[k].coeff(mono.delta[i] as usize)
            })
            .collect();
        let kit = TraceKit {
            d_h: d,
            yhat: upsilon.clone(),
            htilde,
            hx,
            upsilon,
            kx: d as i64 - 2 * g - r as i64 + 1,
            ell,
            delta: mono.delta,
            ehat: mono.ehat,
            delta_leading,
            adj_hx,
            norm_hx,
        };
        let failures: Vec<String> =
            kit.invariant_checks(self).into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        if !failures.is_empty() {
            return Err(CurveError::IdentityViolation(failures.join("; ")));
        }
        Ok(kit)
    }
}

impl TraceKit {
    /// `tau_h~(v) = trace(M_{h_X}^{-1} M_v)`, required to be a polynomial.
    pub fn tau_htilde(&self, alg: &CurveAlgebra, v: &AlgebraElement) -> Result<Poly, CurveError> {
        let num = trace_of_product(&self.adj_hx, &alg.mult_matrix(v));
        num.exact_div(&self.norm_hx)
            .ok_or_else(|| CurveError::NonPolynomialTrace(format!("tau_h~ of {}", alg.format_element(v))))
    }

    /// `std_trace(v) = tau_h~(h_X v)`.
    pub fn trace_composition_holds(&self, alg: &CurveAlgebra, v: &AlgebraElement) -> Result<bool, CurveError> {
        Ok(alg.std_trace(v) == self.tau_htilde(alg, &alg.mult(&self.hx, v))?)
    }

    /// `[tau_h~(Y^_i y_j)]`.
    pub fn duality_matrix(&self, alg: &CurveAlgebra) -> Result<PolyMatrix, CurveError> {
        self.pairing_matrix(alg, &self.upsilon)
    }

    fn pairing_matrix(&self, alg: &CurveAlgebra, family: &[AlgebraElement]) -> Result<PolyMatrix, CurveError> {
        let r = alg.r();
        let mut m = PolyMatrix::zeros(r, r);
        for (i, f) in family.iter().enumerate() {
            for j in 0..r {
                m.set(i, j, self.tau_htilde(alg, &alg.mult(f, &alg.basis(j)))?);
            }
        }
        Ok(m)
    }

    /// Named checks of the structural identities of the kit.
    pub fn invariant_checks(&self, alg: &CurveAlgebra) -> Vec<(String, bool)> {
        let h = alg.semigroup();
        let r = alg.r();
        let mut out = Vec::new();
        let ann = (0..r).all(|i| alg.annihilates(&alg.basis(i), &self.htilde));
        out.push(("annihilator identity (a(x)1 - 1(x)a) h~ = 0".to_string(), ann));
        out.push(("h~ symmetric".to_string(), self.htilde.is_symmetric()));
        let diag = (0..r).fold(AlgebraElement::zero(r), |acc, i| acc.add(&alg.mult(&self.upsilon[i], &alg.basis(i))));
        out.push(("h_X = sum Y^_i y_i".to_string(), diag == self.hx));
        let dual = self.duality_matrix(alg).map(|m| m == PolyMatrix::identity(r)).unwrap_or(false);
        out.push(("duality tau_h~(Y^_i y_j) = delta_ij".to_string(), dual));
        let weights = (0..r).all(|i| {
            let lead_idx = h.standard_basis().index_of_class(self.ehat[i] as i64);
            alg.sato_weight(&self.upsilon[i]) == Some(-(self.ehat[i] as i64))
                && alg.leading_index(&self.upsilon[i]) == Some(lead_idx)
                && self.upsilon[i].coeffs[lead_idx].deg_i64() == self.delta[i] as i64
        });
        out.push(("-wt(Y^_i) = e^_i with leading delta~_i y_{e*(l,i)}".to_string(), weights));
        out.push(("delta~_0 monic".to_string(), self.delta_leading[0].is_one()));
        out.push(("wt(h_X) = -d_h".to_string(), alg.sato_weight(&self.hx) == Some(-(self.d_h as i64))));
        out.push(("kX >= 0".to_string(), self.kx >= 0));
        out.push(("kX = 0 iff symmetric".to_string(), (self.kx == 0) == h.is_symmetric()));
        // Top-weight part of column j sits exactly at the class of e^_j.
        let rr = h.r();
        let top = (0..r).all(|j| {
            (0..r).all(|i| {
                let p = &self.htilde.entries[i][j];
                let is_top =
                    !p.is_zero() && rr as i64 * p.deg_i64() + (alg.e()[i] + alg.e()[j]) as i64 == self.d_h as i64;
                is_top == (i == h.standard_basis().index_of_class(self.ehat[j] as i64))
            })
        });
        out.push(("top-weight part is the monomial trace element".to_string(), top));
        if h.m() == 2 {
            let dd = alg.divided_difference(1).ok();
            out.push(("m=2: h~ equals the divided difference".to_string(), dd.as_ref() == Some(&self.htilde)));
            let fy = alg.minimal_poly_of_generator(1).ok().map(|f| {
                let y = alg.basis(alg.gen_index()[0].1);
                let n = f.degree();
                (0..n).fold(AlgebraElement::zero(r), |acc, l| {
                    let c = rat((n - l) as i64);
                    acc.add(&alg.pow(&y, (n - l - 1) as u32).scale_poly(&f.a[l].scale(&c)))
                })
            });
            out.push(("m=2: h_X = df/dy".to_string(), fy.as_ref() == Some(&self.hx)));
        }
        out
    }

    /// Generators of the complementary module with membership test.
    pub fn complementary_module(&self, alg: &CurveAlgebra, mode: YhatMode) -> Result<ComplementaryModule, CurveError> {
        let generators = self.yhat_family(alg, mode)?;
        let det = PolyMatrix::from_rows(self.upsilon.iter().map(|u| u.coeffs.clone()).collect()).det();
        let principal = det.degree() == Some(0);
        if alg.semigroup().is_symmetric() && !principal {
            return Err(CurveError::IdentityViolation("symmetric semigroup but 1/h_X does not generate".into()));
        }
        Ok(ComplementaryModule { generators, denominator: self.hx.clone(), principal })
    }

    /// Whether `num / den` lies in `R_X^c`: `std_trace(num y_j / den)` must be
    /// a polynomial for every `j`.
    pub fn in_complementary(
        &self,
        alg: &CurveAlgebra,
        num: &AlgebraElement,
        den: &AlgebraElement,
    ) -> Result<bool, CurveError> {
        let r = alg.r();
        if *den == self.hx {
            return Ok((0..r).all(|j| self.tau_htilde(alg, &alg.mult(num, &alg.basis(j))).is_ok()));
        }
        let md = alg.mult_matrix(den);
        let norm = md.det();
        if norm.is_zero() {
            return Err(CurveError::IdentityViolation("denominator is a zero divisor".into()));
        }
        let adj = md.adjugate();
        for j in 0..r {
            let mv = alg.mult_matrix(&alg.mult(num, &alg.basis(j)));
            if trace_of_product(&adj, &mv).exact_div(&norm).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Y^` itself, or a copy with trailing low-weight terms removed while the
    /// `Q[x]`-span is unchanged (checked exactly after every deletion).
    pub fn yhat_family(&self, alg: &CurveAlgebra, mode: YhatMode) -> Result<Vec<AlgebraElement>, CurveError> {
        if mode == YhatMode::Upsilon {
            return Ok(self.upsilon.clone());
        }
        let rr = alg.semigroup().r() as i64;
        let e = alg.e();
        let det_of =
            |fam: &[AlgebraElement]| PolyMatrix::from_rows(fam.iter().map(|u| u.coeffs.clone()).collect()).det();
        let base_det = det_of(&self.upsilon);
        let mut family = self.upsilon.clone();
        for i in 0..family.len() {
            loop {
                // Lowest-weight monomial x^m y_k of family[i].
                let mut terms: Vec<(i64, usize, usize)> = Vec::new();
                for (k, c) in family[i].coeffs.iter().enumerate() {
                    for (m, a) in c.coeffs().iter().enumerate() {
                        if !a.is_zero() {
                            terms.push((rr * m as i64 + e[k] as i64, k, m));
                        }
                    }
                }
                if terms.len() <= 1 {
                    break;
                }
                let &(_, k, m) = terms.iter().min().expect("nonempty");
                let mut cand = family[i].clone();
                let mut cs = cand.coeffs[k].coeffs().to_vec();
                cs[m] = Rat::zero();
                cand.coeffs[k] = Poly::from_coeffs(cs);
                let in_span = (0..alg.r()).all(|j| self.tau_htilde(alg, &alg.mult(&cand, &alg.basis(j))).is_ok());
                let mut trial = family.clone();
                trial[i] = cand;
                let same_span = in_span && {
                    let d = det_of(&trial);
                    !d.is_zero()
                        && d.divmod(&base_det).map(|(q, rem)| rem.is_zero() && q.degree() == Some(0)).unwrap_or(false)
                };
                if !same_span {
                    break;
                }
                family = trial;
            }
        }
        Ok(family)
    }

    /// The degree identities, with `kX` also computed from norms:
    /// `deg N(h_X) = d_h` and `deg det(trace form) = 2g + r - 1`.
    pub fn invariants_report(&self, alg: &CurveAlgebra) -> Result<InvariantsReport, CurveError> {
        let h = alg.semigroup();
        let g = h.genus() as u64;
        let r = alg.r() as u64;
        let disc = alg.trace_form().det();
        let kx_from_norms = self.norm_hx.deg_i64() - disc.deg_i64();
        let report = InvariantsReport {
            d_h: self.d_h,
            g,
            r,
            kx: self.kx,
            kx_from_norms,
            c_hat: self.d_h as i64 - kx_from_norms - r as i64 + 1,
            c_x: *alg.e().last().expect("nonempty") as i64 - r as i64 + 1,
            conductor: h.conductor(),
            symmetric: h.is_symmetric(),
        };
        if !report.all_hold() {
            let failed: Vec<&str> = report.checks().into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
            return Err(CurveError::IdentityViolation(failed.join("; ")));
        }
        Ok(report)
    }

    /// `N(h_X) = det M_{h_X}`.
    pub fn norm_hx(&self) -> &Poly {
        &self.norm_hx
    }
}

/// `trace(a b)` without forming the product.
fn trace_of_product(a: &PolyMatrix, b: &PolyMatrix) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..a.nrows() {
        for k in 0..a.ncols() {
            let (p, q) = (a.get(i, k), b.get(k, i));
            if !p.is_zero() && !q.is_zero() {
                acc += &(p * q);
            }
        }
    }
    acc
}
