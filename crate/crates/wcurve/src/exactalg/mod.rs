//! Exact arithmetic substrate: rationals, univariate polynomials in `x`,
//! polynomial matrices, rational linear systems and truncated Laurent series.

mod linear;
mod matrix;
mod poly;
mod ratfunc;
mod series;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub use linear::{solve_linear, LinearSolution};
pub use matrix::{matrix_minimal_poly, resultant_y, PolyMatrix};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::{series_newton_solve, Series, SeriesEquation, SeriesTerm};

/// Arbitrary-precision rational number in canonical form.
pub type Rat = BigRational;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular jet at order {order}: {reason}")]
    SingularJet { order: usize, reason: String },
    #[error("series division by a series with zero leading term")]
    SeriesNotInvertible,
    #[error("cannot parse rational from {0:?}")]
    ParseRat(String),
}

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, AlgError> {
    let err = || AlgError::ParseRat(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: `a` or `a/b`.
pub fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest `f64` to a rational (saturating for huge values).
pub fn rat_to_f64(q: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Scale down both parts to keep the quotient representable.
    let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
    let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
    if d == 0.0 {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    } else {
        n / d
    }
}

/// Exact rational `r`-th root of `q` if one exists, choosing the positive root
/// for even `r` (callers try the negated root themselves).
pub fn rat_root(q: &Rat, r: u32) -> Option<Rat> {
    if r == 0 {
        return None;
    }
    if q.is_zero() {
        return Some(Rat::zero());
    }
    if q.is_negative() && r % 2 == 0 {
        return None;
    }
    let n = q.numer().abs().nth_root(r);
    let d = q.denom().nth_root(r);
    let cand = Rat::new(n, d);
    let signed = if q.is_negative() { -cand } else { cand };
    if num::pow(signed.clone(), r as usize) == *q {
        Some(signed)
    } else {
        None
    }
}
