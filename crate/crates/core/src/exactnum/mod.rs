//! Exact arithmetic: big integers, reduced rationals, dense univariate
//! polynomials and the combinatorial numbers the expansions are built from.
//!
//! Nothing in this crate ever touches floating point.

mod combinat;
mod poly;

pub use combinat::{binomial, factorial, factorial_u, stirling2};
pub use poly::{interpolate, Indeterminate, UniPoly};

use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// Rational number, always kept in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("indeterminate mismatch: {left} vs {right}")]
    IndeterminateMismatch {
        left: Indeterminate,
        right: Indeterminate,
    },
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(ExactRational),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> ExactRational {
    ExactRational::from_integer(ExactInt::from(n))
}

/// Shorthand for `num / den`, reduced.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(ExactInt::from(num), ExactInt::from(den))
}
