//! Constructive closed forms for `(A + B)^r` in each algebra, the
//! composition weight-enumerator for the shift algebra, and recovery of the
//! top total-degree layers of `(N + n)^r` as formulas in `r`.

mod binomial;
mod compositions;
mod layers;
mod shift;

pub use binomial::{binomial_expand, gaussian_binomial, q_binomial_expand, q_integer, weyl_expand, QFactorialTable};
pub use compositions::{enumerate_compositions, Composition, Compositions};
pub use layers::{infer_layer_formula, layer_decomposition, top_layers, LayerError, LayerFormula};
pub use shift::{
    pretend_commutative_power, shift_expand, shift_p_compositions, shift_p_recurrence, shift_p_table,
};
