//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero only when a criterion outside `KNOWN_FAILURES` fails.

use std::time::{Duration, Instant};

use num::complex::Complex64;
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wcurve::curve::{fixture, fixture_names, FixtureParams};
use wcurve::exactalg::{rat, ratio};
use wcurve::monomial::trace_monomials;
use wcurve::numverify::{indicator_test, trace_consistency, VerifyError};
use wcurve::{AlgebraElement, CurveAlgebra, NumericalSemigroup, Poly, PolyMatrix, Rat};
use wcurve_cli::run_from;

/// Criterion 4 expects the trigonal fixture to give `h_X = 3 k2 k3^2` at
/// `d_h = 24`. The annihilator of that curve is generated in weight 14 and
/// `3 k2 k3^2` is not a multiple of its diagonal, so this criterion fails.
const KNOWN_FAILURES: &[usize] = &[4];

type Outcome = Result<String, String>;

fn h(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(g).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn default_fixture(name: &str) -> CurveAlgebra {
    fixture(name, &FixtureParams::default_for(name).unwrap()).unwrap()
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.random_range(-40i64..=40), rng.random_range(1i64..=5))
}

fn distinct_rats(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < n {
        let v = random_rat(rng);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn random_plane(rng: &mut ChaCha8Rng) -> (u64, u64, Vec<Poly>) {
    loop {
        let r = rng.random_range(2u64..=4);
        let s = rng.random_range(r + 1..=9);
        if num::integer::gcd(r, s) != 1 {
            continue;
        }
        let mut coeffs: Vec<Vec<i64>> =
            (1..=r).map(|i| (0..=i * s / r).map(|_| rng.random_range(-3i64..=3)).collect()).collect();
        coeffs[r as usize - 1][s as usize] = -1;
        let a = coeffs.iter().map(|c| Poly::from_ints(c)).collect();
        return (r, s, a);
    }
}

fn df_dy(r: usize, a: &[Poly]) -> AlgebraElement {
    let mut out = AlgebraElement::zero(r);
    for l in 0..r {
        let al = if l == 0 { Poly::one() } else { a[l - 1].clone() };
        out.coeffs[r - l - 1] = al.scale(&rat((r - l) as i64));
    }
    out
}

/// Whether `target` lies in `hx * R_X`.
fn divisible(alg: &CurveAlgebra, hx: &AlgebraElement, target: &AlgebraElement) -> bool {
    let m = alg.mult_matrix(hx);
    let det = m.det();
    let col = PolyMatrix::from_rows(target.coeffs.iter().map(|c| vec![c.clone()]).collect());
    let sol = m.adjugate().mul(&col);
    (0..alg.r()).all(|i| sol.get(i, 0).exact_div(&det).is_some())
}

fn c1_gaps() -> Outcome {
    let start = Instant::now();
    let cases: [(&[u64], Vec<u64>); 3] = [
        (&[3, 7, 8], vec![1, 2, 4, 5]),
        (&[5, 7, 11], vec![1, 2, 3, 4, 6, 8, 9, 13]),
        (&[6, 13, 14, 15, 16], vec![1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 17, 23]),
    ];
    for (gens, expected) in &cases {
        let s = h(gens);
        ensure(s.gaps() == expected.as_slice(), || format!("{gens:?}: got {:?}", s.gaps()))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_millis(100), || format!("took {t:?}"))?;
    Ok(format!("three gap sequences in {t:?}"))
}

fn c2_schubert() -> Outcome {
    let a = h(&[3, 7, 8]).schubert_index();
    let b = h(&[6, 13, 14, 15, 16]).schubert_index();
    ensure(a == [0, 0, 1, 1], || format!("<3,7,8>: {a:?}"))?;
    ensure(b == [0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 6, 11], || format!("<6,13,14,15,16>: {b:?}"))?;
    Ok("{0^2,1^2} and {0^5,1^5,6,11}".into())
}

fn c3_trace_tables() -> Outcome {
    let s = h(&[4, 6, 7, 9]);
    ensure(s.minimal_valid_trace_degree() == 13, || "<4,6,7,9> minimal degree".into())?;
    let t = trace_monomials(&s, 13).map_err(|e| e.to_string())?;
    ensure(t.ehat == [13, 7, 6, 4], || format!("<4,6,7,9> e^ = {:?}", t.ehat))?;
    let s = h(&[6, 13, 14, 15, 16]);
    let t = trace_monomials(&s, 29).map_err(|e| e.to_string())?;
    ensure(t.ehat == [29, 16, 15, 14, 13, 0], || format!("sextic e^ = {:?}", t.ehat))?;
    let s = h(&[5, 7, 11, 13]);
    let t = trace_monomials(&s, 25).map_err(|e| e.to_string())?;
    let shown = t.render(&s);
    ensure(shown == "Z5^5 + Z5 Z13 Z7' + Z7^2 Z11' + Z5 Z7 Z13' + Z11 Z7'^2", || format!("<5,7,11,13>@25: {shown}"))?;
    let out = run_from(["wcurve", "semigroup", "5", "7", "11", "13"]);
    ensure(out.stdout.contains("minimal valid trace degree: 24"), || "minimal degree report".into())?;
    ensure(out.stdout.contains("note:"), || "missing discrepancy note".into())?;
    Ok("e^ rows match; <5,7,11,13> reports 24 with a note".into())
}

fn c4_trace_elements() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for name in fixture_names() {
        let mut sets = vec![FixtureParams::default_for(name).unwrap()];
        let na = FixtureParams::default_for(name).unwrap().a.len();
        for _ in 0..3 {
            let b = distinct_rats(&mut rng, sets[0].b.len());
            let a = (0..na).map(|_| loop {
                let v = random_rat(&mut rng);
                if v != rat(0) {
                    break v;
                }
            });
            sets.push(FixtureParams { b, a: a.collect() });
        }
        for params in &sets {
            let alg = fixture(name, params).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
            let elapsed = start.elapsed();
            slowest = slowest.max(elapsed);
            ensure(elapsed < Duration::from_secs(60), || format!("{name}: solve took {elapsed:?}"))?;
            let k2 = Poly::from_roots(&params.b[..2]);
            let k3 = Poly::from_roots(&params.b[2..5]);
            let r = alg.r();
            let (d_h, expected) = match *name {
                "trigonal378" => (24, AlgebraElement::from_poly(r, (&k2 * &(&k3 * &k3)).scale(&rat(3)))),
                "pentagonal" => (25, AlgebraElement::from_poly(r, (&k2 * &k3).scale(&rat(5)))),
                _ => (29, AlgebraElement::term(r, r - 1, Poly::constant(rat(6)))),
            };
            if kit.d_h != d_h || kit.hx != expected {
                let member = divisible(&alg, &kit.hx, &expected);
                failures.push(format!(
                    "{name}: d_h = {}, h_X = {}; expected d_h = {d_h}, {} ({} h_X R_X)",
                    kit.d_h,
                    alg.format_element(&kit.hx),
                    alg.format_element(&expected),
                    if member { "in" } else { "not in" },
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("3 fixtures x 4 parameter sets; slowest solve {slowest:?}"))
    } else {
        let passed: Vec<&str> =
            fixture_names().iter().copied().filter(|n| !failures.iter().any(|f| f.starts_with(*n))).collect();
        Err(format!("{} of 12 solves mismatch, exact on {passed:?}; first: {}", failures.len(), failures[0]))
    }
}

fn c5_plane_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 0..10 {
        let (r, s, a) = random_plane(&mut rng);
        let alg = CurveAlgebra::from_plane(r, s, a.clone()).map_err(|e| e.to_string())?;
        let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
        let dd = alg.divided_difference(1).map_err(|e| e.to_string())?;
        ensure(kit.htilde == dd, || format!("curve {n} (r={r}, s={s}): h~ differs from the divided difference"))?;
        ensure(kit.hx == df_dy(r as usize, &a), || format!("curve {n} (r={r}, s={s}): h_X differs from df/dy"))?;
    }
    Ok("10 random plane curves".into())
}

fn c6_duality() -> Outcome {
    for name in fixture_names() {
        let alg = default_fixture(name);
        let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
        let m = kit.duality_matrix(&alg).map_err(|e| e.to_string())?;
        ensure(m == PolyMatrix::identity(alg.r()), || format!("{name}: duality matrix is not the identity"))?;
    }
    Ok("identity on all fixtures".into())
}

fn identity_suite(alg: &CurveAlgebra, label: &str) -> Result<(), String> {
    let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
    let inv = kit.invariants_report(alg).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = inv.checks().into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    ensure(failed.is_empty(), || format!("{label}: {failed:?}"))?;
    let h = alg.semigroup();
    ensure(inv.kx == 0 || !h.is_symmetric(), || format!("{label}: kX = {} on a symmetric semigroup", inv.kx))?;
    ensure(inv.kx != 0 || h.is_symmetric(), || format!("{label}: kX = 0 on a non-symmetric semigroup"))
}

fn c7_identities() -> Outcome {
    for name in fixture_names() {
        identity_suite(&default_fixture(name), name)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..20 {
        let (r, s, a) = random_plane(&mut rng);
        let alg = CurveAlgebra::from_plane(r, s, a).map_err(|e| e.to_string())?;
        identity_suite(&alg, &format!("plane curve {n} (r={r}, s={s})"))?;
    }
    Ok("fixtures and 20 random plane curves".into())
}

fn c8_gap_theorem() -> Outcome {
    for name in fixture_names() {
        let alg = default_fixture(name);
        let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
        let h = alg.semigroup();
        let basis = alg.differential_basis(&kit, h.genus() + h.conductor() as usize);
        ensure(basis.gap_theorem_holds(h), || format!("{name}: weights {:?}", basis.gap_weights()))?;
    }
    let pent = default_fixture("pentagonal");
    let kit = pent.annihilator_solve(None).map_err(|e| e.to_string())?;
    let basis = pent.differential_basis(&kit, 8);
    let x = Poly::x();
    let expected = [
        pent.basis(1),
        pent.basis(2),
        pent.basis(1).scale_poly(&x),
        pent.basis(3),
        pent.basis(2).scale_poly(&x),
        pent.basis(1).scale_poly(&(&x * &x)),
        pent.basis(4),
        pent.basis(3).scale_poly(&x),
    ];
    let got: Vec<&AlgebraElement> = basis.holomorphic().iter().map(|e| &e.numerator).collect();
    ensure(got.iter().copied().eq(expected.iter()), || "pentagonal numerators differ".into())?;
    ensure(basis.denominator == kit.hx, || "pentagonal denominator is not h_X".into())?;
    Ok("all fixtures; pentagonal numerators y, w, xy, y^2, xw, x^2y, yw, xy^2".into())
}

fn c9_series() -> Outcome {
    let mut scales = Vec::new();
    for name in fixture_names() {
        let alg = default_fixture(name);
        let h = alg.semigroup();
        let order = h.conductor() as usize + 2 * h.genus() + alg.r();
        let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
        let exp = alg.expand_at_infinity(&kit, order).map_err(|e| e.to_string())?;
        ensure(exp.gauge_exact, || format!("{name}: gauge not exact"))?;
        for nu in &exp.nu {
            ensure(nu.leading_exponent == nu.gap as i64 - 1, || format!("{name}: nu_{} exponent", nu.index))?;
            ensure(nu.series.leading_coeff() == Some(&Rat::one()), || format!("{name}: nu_{} lead", nu.index))?;
            ensure(nu.series.rel_order() >= order, || format!("{name}: nu_{} order", nu.index))?;
        }
        let raw: Vec<String> = exp.nu.iter().map(|n| n.scale.to_string()).collect();
        scales.push(format!("{name} raw scales [{}]", raw.join(", ")));
    }
    Ok(scales.join("; "))
}

fn c10_numeric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for name in fixture_names() {
        let start = Instant::now();
        let alg = default_fixture(name);
        let kit = alg.annihilator_solve(None).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 10 {
            let x0 = Complex64::new(rng.random_range(-776i64..=776) as f64 / 97.0, 0.0);
            let seed: u64 = rng.random();
            let rep = match indicator_test(&alg, &kit, x0, seed, 1e-8) {
                Err(VerifyError::NearBranchPoint { .. }) => continue,
                other => other.map_err(|e| format!("{name} at x0 = {}: {e}", x0.re))?,
            };
            worst = worst.max(rep.max_error);
            let v = AlgebraElement {
                coeffs: (0..alg.r())
                    .map(|_| Poly::from_ints(&(0..3).map(|_| rng.random_range(-3i64..=3)).collect::<Vec<_>>()))
                    .collect(),
            };
            let tr =
                trace_consistency(&alg, &v, x0, seed, 1e-8).map_err(|e| format!("{name} at x0 = {}: {e}", x0.re))?;
            worst = worst.max(tr.error);
            done += 1;
        }
        let t = start.elapsed();
        ensure(t < Duration::from_secs(10), || format!("{name}: took {t:?}"))?;
    }
    Ok(format!("30 points, worst error {worst:.2e}"))
}

fn c11_trace_form_degree() -> Outcome {
    let mut got = Vec::new();
    for name in fixture_names() {
        let alg = default_fixture(name);
        let h = alg.semigroup();
        let deg = alg.trace_form().det().degree().unwrap_or(0);
        let expected = 2 * h.genus() + alg.r() - 1;
        ensure(deg == expected, || format!("{name}: deg det T = {deg}, 2g + r - 1 = {expected}"))?;
        got.push(format!("{name} {deg}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..10 {
        let (r, s, a) = random_plane(&mut rng);
        let alg = CurveAlgebra::from_plane(r, s, a).map_err(|e| e.to_string())?;
        let deg = alg.trace_form().det().degree().unwrap_or(0);
        let expected = 2 * alg.semigroup().genus() + alg.r() - 1;
        ensure(deg == expected, || format!("plane curve {n}: {deg} vs {expected}"))?;
    }
    Ok(format!("{}; 10 plane curves (sextic: 2*12 + 6 - 1 = 29, not 17)", got.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("gap sequences", c1_gaps),
        ("Schubert indices", c2_schubert),
        ("monomial trace tables", c3_trace_tables),
        ("curve-level h_X", c4_trace_elements),
        ("plane-curve oracle", c5_plane_oracle),
        ("duality matrix", c6_duality),
        ("identity suite", c7_identities),
        ("differential gap theorem", c8_gap_theorem),
        ("series at infinity", c9_series),
        ("numerical indicator", c10_numeric),
        ("trace-form degree", c11_trace_form_degree),
    ];
    let mut unexpected = Vec::new();
    for (i, (label, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(detail) => println!("PASS {n}: {label}: {detail}"),
            Err(detail) => {
                let known = KNOWN_FAILURES.contains(&n);
                println!("FAIL {n}: {label} ({detail}){}", if known { " [known]" } else { "" });
                if !known {
                    unexpected.push(n);
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
