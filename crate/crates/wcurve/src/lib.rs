//! Exact computational engine for pointed Weierstrass curves.
//!
//! A Weierstrass curve is described by its numerical semigroup `H` at the
//! point at infinity and by a multiplication table presenting the affine
//! coordinate ring `R_X` as a free module over `Q[x]`. From that data the
//! crate computes:
//!
//! - the combinatorics of `H` ([`semigroup`]): gaps, standard basis,
//!   Schubert index, valid trace degrees;
//! - the monomial (toric) model of the curve ([`monomial`]);
//! - the trace element `h~`, its diagonal `h_X`, the dual family and the
//!   complementary module, and the basis of holomorphic differentials
//!   ([`curve`]);
//! - floating-point cross-checks on fibers of `x` ([`numverify`]).
//!
//! All algebra is exact over the rationals ([`exactalg`]).

pub mod curve;
pub mod exactalg;
pub mod monomial;
pub mod numverify;
pub mod semigroup;

pub use curve::{AlgebraElement, CurveAlgebra, CurveError, TensorElement, TraceKit};
pub use exactalg::{Poly, PolyMatrix, Rat, Series};
pub use semigroup::{NumericalSemigroup, SemigroupError, StandardBasis};
