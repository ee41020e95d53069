//! Normal-form polynomials in four two-generator algebras.
//!
//! Every algebra has a left generator `A` and a right generator `B`; a
//! monomial is always written `A^i B^j`. The algebras differ only in how a
//! product `B^j A^i` is brought back to that order:
//!
//! | kind          | generators | relation        |
//! |---------------|------------|-----------------|
//! | commutative   | `x`, `y`   | `yx = xy`       |
//! | q-commutative | `x`, `y`   | `yx = q xy`     |
//! | Weyl          | `x`, `D`   | `Dx = xD + 1`   |
//! | shift         | `n`, `N`   | `Nn = nN + N`   |

mod coeff;
mod normal;
mod powers;

pub use coeff::Coefficient;
pub use normal::{reorder, NormalPoly};
pub use powers::{from_powers_form, to_powers_form, PowersOfNForm};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    #[serde(rename = "comm")]
    Commutative,
    #[serde(rename = "q")]
    QCommutative,
    Weyl,
    Shift,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 4] = [
        AlgebraKind::Commutative,
        AlgebraKind::QCommutative,
        AlgebraKind::Weyl,
        AlgebraKind::Shift,
    ];

    /// `(left, right)` generator names; normal order writes left first.
    pub fn generators(self) -> (&'static str, &'static str) {
        match self {
            AlgebraKind::Commutative | AlgebraKind::QCommutative => ("x", "y"),
            AlgebraKind::Weyl => ("x", "D"),
            AlgebraKind::Shift => ("n", "N"),
        }
    }

    /// Short name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Commutative => "comm",
            AlgebraKind::QCommutative => "q",
            AlgebraKind::Weyl => "weyl",
            AlgebraKind::Shift => "shift",
        }
    }

    pub fn relation(self) -> &'static str {
        match self {
            AlgebraKind::Commutative => "yx = xy",
            AlgebraKind::QCommutative => "yx = q*xy",
            AlgebraKind::Weyl => "Dx = xD + 1",
            AlgebraKind::Shift => "Nn = nN + N",
        }
    }

    /// Whether coefficients are polynomials in `q` rather than rationals.
    pub fn has_q(self) -> bool {
        self == AlgebraKind::QCommutative
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "comm" | "commutative" => Ok(AlgebraKind::Commutative),
            "q" | "qcomm" => Ok(AlgebraKind::QCommutative),
            "weyl" => Ok(AlgebraKind::Weyl),
            "shift" => Ok(AlgebraKind::Shift),
            other => Err(AlgebraError::UnknownAlgebra(other.to_string())),
        }
    }
}

/// Exponent pair `(i, j)` standing for `A^i B^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub left: u32,
    pub right: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { left: 0, right: 0 };

    pub fn new(left: u32, right: u32) -> Self {
        Monomial { left, right }
    }

    pub fn total_degree(self) -> u32 {
        self.left + self.right
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cannot combine {left} and {right} polynomials")]
    KindMismatch { left: AlgebraKind, right: AlgebraKind },
    #[error("expected a {expected} polynomial, got {found}")]
    WrongKind { expected: AlgebraKind, found: AlgebraKind },
    #[error("unknown algebra `{0}` (expected comm, q, weyl or shift)")]
    UnknownAlgebra(String),
}
