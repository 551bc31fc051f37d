//! The full invariant battery behind `wcurve curve <spec> verify`.

use num::complex::Complex64;
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wcurve::curve::{AlgebraElement, CurveAlgebra, YhatMode};
use wcurve::exactalg::{Poly, Rat};
use wcurve::numverify::{branch_report, indicator_test, trace_consistency, VerifyError};

use crate::{default_order, RunOptions};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

/// Random element with small integer coefficients of degree <= 2.
pub fn random_element(rng: &mut ChaCha8Rng, r: usize) -> AlgebraElement {
    let coeffs = (0..r)
        .map(|_| Poly::from_coeffs((0..3).map(|_| Rat::from_integer(rng.random_range(-3i64..=3).into())).collect()))
        .collect();
    AlgebraElement { coeffs }
}

/// Random rational `x0 = p / 97` with `|x0| < 8`.
pub fn random_x0(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(-776i64..=776) as f64 / 97.0
}

/// Runs every check; later groups are skipped if the trace kit cannot be built.
pub fn battery(alg: &CurveAlgebra, opts: &RunOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let h = alg.semigroup();
    let r = alg.r();
    let kit = match alg.annihilator_solve(opts.dh) {
        Ok(k) => {
            out.push(check("annihilator solve", true, format!("d_h = {}", k.d_h)));
            k
        }
        Err(e) => {
            out.push(check("annihilator solve", false, e.to_string()));
            return out;
        }
    };
    for (name, ok) in kit.invariant_checks(alg) {
        out.push(check(name, ok, ""));
    }
    match kit.invariants_report(alg) {
        Ok(inv) => {
            for (name, ok) in inv.checks() {
                out.push(check(name, ok, ""));
            }
        }
        Err(e) => out.push(check("degree identities", false, e.to_string())),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut elements: Vec<AlgebraElement> = (0..r).map(|i| alg.basis(i)).collect();
    elements.extend((0..5).map(|_| random_element(&mut rng, r)));
    let composition = elements.iter().all(|v| kit.trace_composition_holds(alg, v).unwrap_or(false));
    out.push(check("std_trace(v) = tau_h~(h_X v)", composition, format!("{} elements", elements.len())));

    match kit.complementary_module(alg, YhatMode::Truncated) {
        Ok(m) => {
            let members = m.generators.iter().all(|g| kit.in_complementary(alg, g, &m.denominator).unwrap_or(false));
            out.push(check("yhat_i / h_X in R_X^c", members, ""));
            let outside =
                kit.in_complementary(alg, &alg.one(), &AlgebraElement::from_poly(r, Poly::x())).unwrap_or(true);
            out.push(check("1/x not in R_X^c", !outside, ""));
            out.push(check(
                "symmetric implies 1/h_X generates",
                !h.is_symmetric() || m.principal,
                format!("principal: {}", m.principal),
            ));
        }
        Err(e) => out.push(check("complementary module", false, e.to_string())),
    }

    let basis = alg.differential_basis(&kit, h.genus() + h.conductor() as usize);
    out.push(check("differential gap theorem", basis.gap_theorem_holds(h), ""));

    let order = opts.order.unwrap_or_else(|| default_order(alg));
    match alg.expand_at_infinity(&kit, order) {
        Ok(ex) => {
            out.push(check("gauge t = x^i_r / y_s^i_s", ex.gauge_exact, format!("s = {}", ex.s)));
            let poles =
                ex.x.valuation() == -(h.r() as i64) && (1..r).all(|i| ex.basis[i].valuation() == -(alg.e()[i] as i64));
            out.push(check("pole orders of x and y_i", poles, ""));
            let nu_ok = ex.nu.len() == h.genus()
                && ex.nu.iter().all(|n| {
                    n.leading_exponent == n.gap as i64 - 1 && n.series.leading_coeff().is_some_and(|c| c.is_one())
                });
            let detail = ex.nu.iter().map(|n| n.leading_exponent.to_string()).collect::<Vec<_>>().join(",");
            out.push(check("nu_i = t^(gap-1)(1 + O(t)) dt", nu_ok, format!("exponents {detail}; order {}", ex.order)));
        }
        Err(e) => out.push(check("series expansion", false, e.to_string())),
    }

    let mut worst_ind: f64 = 0.0;
    let mut worst_tr: f64 = 0.0;
    let mut failure = None;
    let mut done = 0;
    let mut attempts = 0;
    while done < 10 && attempts < 50 && failure.is_none() {
        attempts += 1;
        let x0 = Complex64::new(random_x0(&mut rng), 0.0);
        let seed = rng.random();
        match indicator_test(alg, &kit, x0, seed, opts.tol) {
            Ok(rep) => worst_ind = worst_ind.max(rep.max_error),
            Err(VerifyError::NearBranchPoint { .. }) => continue,
            Err(e) => {
                failure = Some(e.to_string());
                break;
            }
        }
        for i in 0..r {
            match trace_consistency(alg, &alg.basis(i), x0, seed, opts.tol) {
                Ok(rep) => worst_tr = worst_tr.max(rep.error),
                Err(e) => failure = Some(e.to_string()),
            }
        }
        done += 1;
    }
    let numeric_ok = failure.is_none() && done == 10;
    let detail = failure.unwrap_or_else(|| format!("{done} points, indicator {worst_ind:.1e}, trace {worst_tr:.1e}"));
    out.push(check("numerical indicator and fiber traces", numeric_ok, detail));

    match branch_report(alg, 1e-6) {
        Ok(br) => out.push(check(
            "deg det trace_form = 2g + r - 1",
            br.degree == br.expected,
            format!("{} vs {}; {} clusters", br.degree, br.expected, br.clusters.len()),
        )),
        Err(e) => out.push(check("deg det trace_form = 2g + r - 1", false, e.to_string())),
    }
    out
}
