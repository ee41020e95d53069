use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};

use super::AlgebraKind;
use crate::exactnum::{ExactInt, ExactRational, Indeterminate, UniPoly};

/// Commutative coefficient ring of a [`NormalPoly`](super::NormalPoly).
///
/// Rationals serve the commutative, Weyl and shift algebras. The
/// q-commutative algebra needs `q` itself as a scalar, so it uses
/// polynomials in `q`.
pub trait Coefficient: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: ExactInt) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    /// `q^e`, or `None` when the ring has no `q`.
    fn q_power(e: u64) -> Option<Self>;

    /// Whether polynomials of this kind may carry this coefficient type.
    fn admits(kind: AlgebraKind) -> bool {
        !kind.has_q() || Self::q_power(1).is_some()
    }
}

impl Coefficient for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: ExactInt) -> Self {
        ExactRational::from_integer(n)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negate(&self) -> Self {
        -self
    }

    fn q_power(_: u64) -> Option<Self> {
        None
    }
}

impl Coefficient for UniPoly {
    fn zero() -> Self {
        UniPoly::zero(Indeterminate::Q)
    }

    fn one() -> Self {
        UniPoly::one(Indeterminate::Q)
    }

    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }

    fn from_int(n: ExactInt) -> Self {
        UniPoly::constant(Indeterminate::Q, ExactRational::from_integer(n))
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negate(&self) -> Self {
        -self
    }

    fn q_power(e: u64) -> Option<Self> {
        Some(UniPoly::monomial(Indeterminate::Q, One::one(), e as usize))
    }
}
