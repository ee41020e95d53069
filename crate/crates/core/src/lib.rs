//! Exact computer algebra for four two-generator operator algebras.
//!
//! The centre of the crate is the expansion of `(N + n)^r` in the shift
//! algebra (`N f(n) = f(n + 1)`, so `Nn = nN + N`):
//!
//! ```text
//! (N + n)^r = sum_d P_{r,d}(n) N^d
//! ```
//!
//! where `P_{r,d}(n)` sums `prod_j (n + j)^(p_j)` over all compositions
//! `p_0 + ... + p_d = r - d`. The same machinery handles the ordinary,
//! q-commuting and Weyl binomial theorems, and everything is checked
//! against operators acting on test polynomials.
//!
//! ```
//! use opcalc_core::{closedforms::shift_p_recurrence, exactnum::Indeterminate, UniPoly};
//!
//! assert_eq!(shift_p_recurrence(3, 1), UniPoly::from_ints(Indeterminate::N, &[1, 3, 3]));
//! ```

pub mod algebra;
pub mod closedforms;
pub mod exactnum;
pub mod frontend;
pub mod oracle;

pub use algebra::{AlgebraError, AlgebraKind, Coefficient, Monomial, NormalPoly, PowersOfNForm};
pub use closedforms::{LayerError, LayerFormula};
pub use exactnum::{ExactError, ExactInt, ExactRational, UniPoly};
pub use frontend::{AnyPoly, ParseError, RenderStyle};
pub use oracle::VerifyReport;
