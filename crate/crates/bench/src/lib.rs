//! Criterion benchmarks for opcalc. Run with `cargo bench -p opcalc-bench`.
//!
//! `expansion` compares three ways of getting the coefficients of
//! `(N + n)^r`: the recurrence, the composition sum, and repeated
//! multiplication in the algebra. It also times the other closed forms
//! against their powers.
