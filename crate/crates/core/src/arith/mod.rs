//! Exact scalar arithmetic shared by every other module.
//!
//! All coefficients live in `Q` (arbitrary-precision rationals) or in the ring
//! of integer Laurent polynomials `Z[q, q^-1]`. Nothing here is approximate.

mod laurent;
mod qcomb;

pub use laurent::LaurentPoly;
pub use qcomb::{q_binomial, q_factorial, q_integer};

use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// Laurent polynomials cannot be evaluated at zero.
    #[error("cannot evaluate a Laurent polynomial at x = 0")]
    ZeroEvaluationPoint,
    /// `q_binomial(m, k)` requires `k <= m`.
    #[error("q-binomial out of range: k = {k} exceeds m = {m}")]
    BinomialRange { m: u64, k: u64 },
    /// Exact division failed: the divisor does not divide the dividend in
    /// `Z[q, q^-1]`.
    #[error("inexact Laurent polynomial division")]
    InexactDivision,
}

/// Rational from an integer, for tests and small constants.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
