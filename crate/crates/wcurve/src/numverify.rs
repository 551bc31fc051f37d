//! Floating-point checks on fibers of `x: X -> P^1`.
//!
//! Points over `x0` are the characters of `R_X (x) C` at `x = x0`, found as
//! common left eigenvectors of the multiplication matrices evaluated at `x0`.

use nalgebra::DMatrix;
use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curve::{AlgebraElement, CurveAlgebra, CurveError, TraceKit};
use crate::exactalg::Poly;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("x0 is within {distance:e} of a branch value (fiber points collide)")]
    NearBranchPoint { distance: f64 },
    #[error("{what}: error {error:e} exceeds tolerance {tol:e}")]
    ToleranceExceeded { what: String, error: f64, tol: f64 },
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// A point over `x0`: `values[i]` is `y_i(P)` (`values[0] = 1`).
#[derive(Clone, Debug, Serialize)]
pub struct FiberPoint {
    pub x: Complex64,
    pub values: Vec<Complex64>,
}

impl FiberPoint {
    pub fn eval(&self, v: &AlgebraElement) -> Complex64 {
        v.coeffs.iter().zip(&self.values).map(|(p, y)| p.eval_complex(self.x) * y).sum()
    }
}

/// Fiber over `x0` with diagnostics.
#[derive(Clone, Debug, Serialize)]
pub struct Fiber {
    pub points: Vec<FiberPoint>,
    /// Smallest distance between two points, measured on the eigenvalues of
    /// the generic combination.
    pub min_separation: f64,
    /// Largest residual of the table relations `y_i y_j = sum a_ijk y_k`.
    pub relation_residual: f64,
    /// Largest distance from a first-generator coordinate to a root of its
    /// minimal polynomial at `x0`, relative to `max(1, |root|)`.
    pub root_mismatch: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    /// `h~(P, Q) / h_X(P)`.
    pub matrix: Vec<Vec<Complex64>>,
    pub max_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub fiber_sum: Complex64,
    pub exact: Complex64,
    pub error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchCluster {
    pub x: Complex64,
    pub multiplicity: usize,
}

/// Roots of `det trace_form`, grouped into clusters.
#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub degree: usize,
    /// `2g + r - 1`.
    pub expected: usize,
    pub clusters: Vec<BranchCluster>,
    pub all_simple: bool,
    pub consistent: bool,
}

fn eigenvalues(m: DMatrix<Complex64>) -> Result<Vec<Complex64>, VerifyError> {
    let n = m.nrows();
    if let Some(s) = m.clone().try_schur(1e-14, 1000 * n.max(1)) {
        return Ok(s.unpack().1.diagonal().iter().copied().collect());
    }
    // Permutation-like matrices can stall the shifted QR iteration;
    // a random unitary similarity breaks the symmetry.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4 {
        let g = DMatrix::<Complex64>::from_fn(n, n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let q = g.qr().q();
        let conj = q.adjoint() * &m * &q;
        if let Some(s) = conj.try_schur(1e-14, 1000 * n.max(1)) {
            return Ok(s.unpack().1.diagonal().iter().copied().collect());
        }
    }
    Err(VerifyError::Numeric("Schur iteration did not converge".into()))
}

/// Complex roots of a polynomial with rational coefficients.
pub fn poly_roots(p: &Poly) -> Result<Vec<Complex64>, VerifyError> {
    let coeffs: Vec<Complex64> =
        p.coeffs().iter().map(|c| Complex64::new(crate::exactalg::rat_to_f64(c), 0.0)).collect();
    complex_roots(&coeffs)
}

/// Roots of `sum c_k T^k` (low-to-high, nonzero leading coefficient), by
/// Aberth iteration.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, VerifyError> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lc = coeffs[n];
    if lc.norm() == 0.0 {
        return Err(VerifyError::Numeric("zero leading coefficient".into()));
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius.min(1e150), 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 =
                (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    if z.iter().any(|w| !w.is_finite()) {
        return Err(VerifyError::Numeric("root iteration diverged".into()));
    }
    Ok(z)
}

/// Unit vector spanning the (numerical) kernel of `m`.
fn null_vector(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>, VerifyError> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| VerifyError::Numeric("SVD failed".into()))?;
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .ok_or_else(|| VerifyError::Numeric("empty matrix".into()))?;
    Ok(v_t.row(idx).iter().map(|z| z.conj()).collect())
}

/// Computes the `r` points over `x0`.
///
/// `seed` fixes the random combination of generators used to separate points.
pub fn fiber(alg: &CurveAlgebra, x0: Complex64, seed: u64) -> Result<Fiber, VerifyError> {
    let r = alg.r();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = DMatrix::<Complex64>::zeros(r, r);
    for &(_, idx) in alg.gen_index() {
        let c = Complex64::new(rng.random_range(0.5..1.5), rng.random_range(-0.5..0.5));
        a += alg.mult_matrix(&alg.basis(idx)).eval_complex(x0) * c;
    }
    let at = a.transpose();
    let lambdas = eigenvalues(at.clone())?;
    let mut min_separation = f64::INFINITY;
    for i in 0..lambdas.len() {
        for j in (i + 1)..lambdas.len() {
            min_separation = min_separation.min((lambdas[i] - lambdas[j]).norm());
        }
    }
    let mut points = Vec::with_capacity(r);
    for lam in &lambdas {
        let shifted = &at - DMatrix::<Complex64>::identity(r, r) * *lam;
        let v = null_vector(&shifted)?;
        if v[0].norm() < 1e-300 {
            return Err(VerifyError::Numeric("eigenvector with vanishing unit coordinate".into()));
        }
        let v0 = v[0];
        points.push(FiberPoint { x: x0, values: v.into_iter().map(|z| z / v0).collect() });
    }
    let mut relation_residual: f64 = 0.0;
    for p in &points {
        for i in 0..r {
            for j in i..r {
                let prod = p.values[i] * p.values[j];
                let rhs = p.eval(&alg.table()[i][j]);
                relation_residual = relation_residual.max((prod - rhs).norm() / prod.norm().max(1.0));
            }
        }
    }
    let mut root_mismatch: f64 = 0.0;
    if let Some(&(_, idx)) = alg.gen_index().first() {
        let f = alg.minimal_poly_of_generator(1)?;
        let coeffs: Vec<Complex64> = f.coeffs_low_to_high().iter().map(|c| c.eval_complex(x0)).collect();
        let roots = complex_roots(&coeffs)?;
        for p in &points {
            let y = p.values[idx];
            let best = roots.iter().map(|z| (y - z).norm() / z.norm().max(1.0)).fold(f64::INFINITY, f64::min);
            root_mismatch = root_mismatch.max(best);
        }
    }
    Ok(Fiber { points, min_separation, relation_residual, root_mismatch })
}

/// Fiber that refuses near-branch `x0` (points closer than `near`).
pub fn generic_fiber(alg: &CurveAlgebra, x0: Complex64, seed: u64, near: f64) -> Result<Fiber, VerifyError> {
    let fib = fiber(alg, x0, seed)?;
    if alg.r() > 1 && fib.min_separation < near {
        return Err(VerifyError::NearBranchPoint { distance: fib.min_separation });
    }
    Ok(fib)
}

/// `h~(x0; P, Q) / h_X(x0; P)` over all ordered pairs; should be `delta_PQ`.
pub fn indicator_test(
    alg: &CurveAlgebra,
    kit: &TraceKit,
    x0: Complex64,
    seed: u64,
    tol: f64,
) -> Result<IndicatorReport, VerifyError> {
    let fib = generic_fiber(alg, x0, seed, 1e-4)?;
    let r = alg.r();
    let h: Vec<Vec<Complex64>> =
        kit.htilde.entries.iter().map(|row| row.iter().map(|p| p.eval_complex(x0)).collect()).collect();
    let mut matrix = Vec::with_capacity(r);
    let mut max_error: f64 = 0.0;
    for (pi, p) in fib.points.iter().enumerate() {
        let hx = p.eval(&kit.hx);
        let mut row = Vec::with_capacity(r);
        for (qi, q) in fib.points.iter().enumerate() {
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..r {
                for j in 0..r {
                    s += h[i][j] * p.values[i] * q.values[j];
                }
            }
            let val = s / hx;
            let target = if pi == qi { 1.0 } else { 0.0 };
            max_error = max_error.max((val - Complex64::new(target, 0.0)).norm());
            row.push(val);
        }
        matrix.push(row);
    }
    if !(max_error < tol) {
        return Err(VerifyError::ToleranceExceeded { what: "indicator matrix".into(), error: max_error, tol });
    }
    Ok(IndicatorReport { matrix, max_error })
}

/// Compares `sum_P v(P)` with `std_trace(v)(x0)`.
pub fn trace_consistency(
    alg: &CurveAlgebra,
    v: &AlgebraElement,
    x0: Complex64,
    seed: u64,
    tol: f64,
) -> Result<TraceReport, VerifyError> {
    let fib = generic_fiber(alg, x0, seed, 1e-4)?;
    let fiber_sum: Complex64 = fib.points.iter().map(|p| p.eval(v)).sum();
    let exact = alg.std_trace(v).eval_complex(x0);
    let scale: f64 = fib.points.iter().map(|p| p.eval(v).norm()).sum();
    let error = (fiber_sum - exact).norm() / scale.max(1.0);
    if !(error < tol) {
        return Err(VerifyError::ToleranceExceeded { what: "fiber trace".into(), error, tol });
    }
    Ok(TraceReport { fiber_sum, exact, error })
}

/// Clusters the roots of `det trace_form` (the discriminant of `R_X / R_P`).
pub fn branch_report(alg: &CurveAlgebra, tol: f64) -> Result<BranchReport, VerifyError> {
    let disc = alg.trace_form().det();
    let degree = disc.degree().unwrap_or(0);
    let expected = 2 * alg.semigroup().genus() + alg.r() - 1;
    let mut clusters: Vec<BranchCluster> = Vec::new();
    for z in poly_roots(&disc)? {
        match clusters.iter_mut().find(|c| (c.x - z).norm() < tol * c.x.norm().max(1.0)) {
            Some(c) => {
                let m = c.multiplicity as f64;
                c.x = (c.x * m + z) / (m + 1.0);
                c.multiplicity += 1;
            }
            None => clusters.push(BranchCluster { x: z, multiplicity: 1 }),
        }
    }
    let all_simple = clusters.iter().all(|c| c.multiplicity == 1);
    let consistent = degree == expected && (!all_simple || clusters.len() == expected);
    Ok(BranchReport { degree, expected, clusters, all_simple, consistent })
}
