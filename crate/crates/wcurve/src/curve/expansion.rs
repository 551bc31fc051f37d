//! Laurent expansions at the point at infinity in the arithmetic local
//! parameter `t = x^{i_r} / y_s^{i_s}`.

use num::{One, Zero};
use serde::Serialize;

use super::{AlgebraElement, CurveAlgebra, CurveError, TraceKit};
use crate::exactalg::{rat_root, series_newton_solve, AlgError, Poly, Rat, Series, SeriesEquation, SeriesTerm};
use crate::monomial;
use crate::semigroup::bezout_pair;

/// Series of one holomorphic `nu = phi^ dx / h_X`, as `series * dt`.
#[derive(Clone, Debug, Serialize)]
pub struct NuExpansion {
    pub index: usize,
    pub gap: u64,
    pub leading_exponent: i64,
    /// Leading coefficient before normalization.
    pub scale: Rat,
    /// `nu / scale`, leading coefficient 1.
    #[serde(skip)]
    pub series: Series,
}

/// Expansions of `x`, the basis `y_i` and the holomorphic differentials.
#[derive(Clone, Debug, Serialize)]
pub struct InfinityExpansion {
    /// The generator `s` coprime to `r` used for the gauge.
    pub s: u64,
    pub i_s: u64,
    pub i_r: u64,
    #[serde(skip)]
    pub x: Series,
    /// Indexed like the basis (`basis[0] = 1`).
    #[serde(skip)]
    pub basis: Vec<Series>,
    pub nu: Vec<NuExpansion>,
    /// Whether `x^{i_r} - t y_s^{i_s}` vanishes to the working precision.
    pub gauge_exact: bool,
    /// Relative order of every returned series.
    pub order: usize,
}

fn singular(reason: impl Into<String>) -> CurveError {
    AlgError::SingularJet { order: 0, reason: reason.into() }.into()
}

/// `sum_k c_k X^k` truncated to the precision of its leading term.
pub fn eval_poly_series(p: &Poly, x: &Series) -> Series {
    let Some(n) = p.degree() else {
        return Series::zero(x.prec());
    };
    let target = x.valuation() * n as i64 + x.rel_order() as i64;
    let mut acc = if target > 0 { Series::monomial(p.coeff(0), 0, target) } else { Series::zero(target) };
    let mut xp = x.clone();
    for k in 1..=n {
        let c = p.coeff(k);
        if !c.is_zero() {
            acc = acc.add(&xp.scale(&c).truncate(target));
        }
        if k < n {
            xp = xp.mul(x);
        }
    }
    acc
}

impl CurveAlgebra {
    /// Expands `x`, every `y_i` and the holomorphic `nu_i` to relative order
    /// `order + 1` by solving the table relations order by order together
    /// with the gauge `x^{i_r} = t y_s^{i_s}`.
    pub fn expand_at_infinity(&self, kit: &TraceKit, order: usize) -> Result<InfinityExpansion, CurveError> {
        let h = self.semigroup();
        let r = self.r();
        let rr = h.r();
        let e = self.e().to_vec();
        if r == 1 {
            let x = Series::new(-1, vec![Rat::one()]).truncate(order as i64);
            return Ok(InfinityExpansion {
                s: 1,
                i_s: 1,
                i_r: 0,
                basis: vec![Series::monomial(Rat::one(), 0, order as i64 + 1)],
                x,
                nu: Vec::new(),
                gauge_exact: true,
                order: order + 1,
            });
        }
        let Some(&(s, s_idx)) = self.gen_index().iter().find(|(g, _)| num::integer::gcd(*g, rr) == 1) else {
            return Err(singular("no generator coprime to r"));
        };
        let (i_s, i_r) = bezout_pair(rr, s)?;
        // Leading coefficients L_i of y_i^r = L_i x^{e_i} + ...
        let lead_pow: Vec<Rat> =
            (0..r).map(|i| self.pow(&self.basis(i), rr as u32).coeffs[0].coeff(e[i] as usize)).collect();
        if lead_pow.iter().any(|c| c.is_zero()) {
            return Err(singular("vanishing leading coefficient of y_i^r"));
        }
        let ls = &lead_pow[s_idx];
        let alpha = num::pow(ls.recip(), i_s as usize);
        let beta_s = num::pow(ls.recip(), i_r as usize);
        let mut options: Vec<Vec<Rat>> = Vec::with_capacity(r);
        for i in 0..r {
            if i == 0 {
                options.push(vec![Rat::one()]);
            } else if i == s_idx {
                options.push(vec![beta_s.clone()]);
            } else {
                let q = &lead_pow[i] * num::pow(alpha.clone(), e[i] as usize);
                let root = rat_root(&q, rr as u32)
                    .ok_or_else(|| singular(format!("leading coefficient of y_{} is not a rational root", e[i])))?;
                let mut opts = vec![root.clone()];
                if rr % 2 == 0 && !root.is_zero() {
                    opts.push(-root);
                }
                options.push(opts);
            }
        }
        let beta = self.pick_leading(&options, &alpha)?;
        // Unknowns: V_0 = x, V_i = y_i for i >= 1.
        let mut equations = Vec::new();
        for i in 1..r {
            for j in i..r {
                let mut terms = Vec::new();
                let mut p = vec![0u32; r];
                p[i] += 1;
                p[j] += 1;
                terms.push(SeriesTerm { coeff: Rat::one(), t_exp: 0, powers: p });
                for (k, a) in self.table()[i][j].coeffs.iter().enumerate() {
                    for (m, c) in a.coeffs().iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut p = vec![0u32; r];
                        p[0] += m as u32;
                        if k > 0 {
                            p[k] += 1;
                        }
                        terms.push(SeriesTerm { coeff: -c.clone(), t_exp: 0, powers: p });
                    }
                }
                equations.push(SeriesEquation { terms });
            }
        }
        let mut gx = vec![0u32; r];
        gx[0] = i_r as u32;
        let mut gy = vec![0u32; r];
        gy[s_idx] = i_s as u32;
        equations.push(SeriesEquation {
            terms: vec![
                SeriesTerm { coeff: Rat::one(), t_exp: 0, powers: gx },
                SeriesTerm { coeff: -Rat::one(), t_exp: 1, powers: gy },
            ],
        });
        let mut leads = vec![(alpha.clone(), -(rr as i64))];
        for i in 1..r {
            leads.push((beta[i].clone(), -(e[i] as i64)));
        }
        let sol = series_newton_solve(&equations, &leads, order)?;
        let x = sol[0].clone();
        let mut basis = vec![Series::monomial(Rat::one(), 0, order as i64 + 1)];
        basis.extend(sol[1..].iter().cloned());
        let gauge = x.pow(i_r as i64)?.sub(&basis[s_idx].pow(i_s as i64)?.shift(1));
        let gauge_exact = gauge.is_zero();

        // Holomorphic differentials nu = x^k yhat_i dx / h_X.
        let dx = x.derivative();
        let hx = self.eval_element_series(&kit.hx, &x, &basis);
        let g = h.genus();
        let diff = self.differential_basis(kit, g);
        let mut nu = Vec::with_capacity(g);
        for (n, entry) in diff.entries.iter().enumerate() {
            let phi = self.eval_element_series(&entry.numerator, &x, &basis);
            let series = phi.mul(&dx).div(&hx)?;
            let scale = series.leading_coeff().cloned().ok_or_else(|| singular("vanishing differential"))?;
            nu.push(NuExpansion {
                index: n + 1,
                gap: entry.gap_weight as u64,
                leading_exponent: series.valuation(),
                series: series.scale(&scale.recip()),
                scale,
            });
        }
        Ok(InfinityExpansion { s, i_s, i_r, x, basis, nu, gauge_exact, order: order + 1 })
    }

    /// Chooses signs of the leading coefficients consistent with every
    /// top-weight product `y_i y_j = a x^p y_k + ...`.
    fn pick_leading(&self, options: &[Vec<Rat>], alpha: &Rat) -> Result<Vec<Rat>, CurveError> {
        let h = self.semigroup();
        let r = self.r();
        let total: usize = options.iter().map(|o| o.len()).product();
        for mut code in 0..total {
            let mut beta = Vec::with_capacity(r);
            for o in options {
                beta.push(o[code % o.len()].clone());
                code /= o.len();
            }
            let mut ok = true;
            'pairs: for i in 1..r {
                for j in i..r {
                    let (k, p) = monomial::structure_b(h, i, j)?;
                    let a = &self.table()[i][j].coeffs[k];
                    let lc = a.coeff(p as usize);
                    if &beta[i] * &beta[j] != lc * num::pow(alpha.clone(), p as usize) * &beta[k] {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                return Ok(beta);
            }
        }
        Err(singular("no consistent choice of leading coefficients"))
    }

    /// `sum_k P_k(X) Y_k` for an algebra element.
    pub fn eval_element_series(&self, v: &AlgebraElement, x: &Series, basis: &[Series]) -> Series {
        let mut acc: Option<Series> = None;
        for (k, p) in v.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let term = eval_poly_series(p, x).mul(&basis[k]);
            acc = Some(match acc {
                Some(a) => a.add(&term),
                None => term,
            });
        }
        acc.unwrap_or_else(|| Series::zero(x.prec()))
    }
}
