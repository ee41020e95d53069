//! Independent checks: let normal-form polynomials act as genuine operators
//! on polynomial test functions, then compare an expansion against the
//! base operator applied `r` times in sequence.
//!
//! Realizations:
//! - shift: `n` multiplies by `n`, `N` maps `f(n)` to `f(n+1)`
//! - Weyl: `x` multiplies by `x`, `D` differentiates
//! - q-commutative: `x` multiplies by `x`, `y` maps `f(x)` to `f(qx)`
//! - commutative: `x` multiplies by `x`, `y` multiplies by `x + 1`

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraKind, NormalPoly};
use crate::closedforms::{binomial_expand, q_binomial_expand, shift_expand, weyl_expand};
use crate::exactnum::{ExactRational, Indeterminate, UniPoly};

/// A sequence `f(n)` given by a polynomial in `n`.
pub type SeqPoly = UniPoly;

/// A function `f(x)` given by a polynomial in `x`.
pub type FuncPoly = UniPoly;

/// A polynomial in `x` whose coefficients are polynomials in `q`;
/// `coeffs[t]` multiplies `x^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFuncPoly {
    coeffs: Vec<UniPoly>,
}

impl QFuncPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        QFuncPoly { coeffs }
    }

    /// Lifts a rational polynomial in `x` to constant q-coefficients.
    pub fn from_rational(f: &FuncPoly) -> Self {
        Self::new(f.coeffs().iter().map(|c| UniPoly::constant(Indeterminate::Q, c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = UniPoly::zero(Indeterminate::Q);
        Self::new(
            (0..len)
                .map(|t| self.coeffs.get(t).unwrap_or(&zero) + other.coeffs.get(t).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for QFuncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| match t {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{t}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// How an algebra acts on its test functions.
pub trait Realization {
    type Coeff: crate::algebra::Coefficient;
    type Func: Clone + PartialEq + fmt::Display;

    const KIND: AlgebraKind;

    fn apply(p: &NormalPoly<Self::Coeff>, f: &Self::Func) -> Self::Func;

    /// Degree-4 test function with integer coefficients in `[-9, 9]` and a
    /// nonzero leading coefficient.
    fn random_function(rng: &mut ChaCha8Rng) -> Self::Func;
}

fn random_int_poly(var: Indeterminate, rng: &mut ChaCha8Rng) -> UniPoly {
    let mut c: Vec<i64> = (0..4).map(|_| rng.gen_range(-9..=9)).collect();
    let lead = loop {
        let v = rng.gen_range(-9..=9);
        if v != 0 {
            break v;
        }
    };
    c.push(lead);
    UniPoly::from_ints(var, &c)
}

pub struct ShiftAction;

impl Realization for ShiftAction {
    type Coeff = ExactRational;
    type Func = SeqPoly;
    const KIND: AlgebraKind = AlgebraKind::Shift;

    fn apply(p: &NormalPoly, f: &SeqPoly) -> SeqPoly {
        apply_shift(p, f)
    }

    fn random_function(rng: &mut ChaCha8Rng) -> SeqPoly {
        random_int_poly(Indeterminate::N, rng)
    }
}

pub struct WeylAction;

impl Realization for WeylAction {
    type Coeff = ExactRational;
    type Func = FuncPoly;
    const KIND: AlgebraKind = AlgebraKind::Weyl;

    fn apply(p: &NormalPoly, f: &FuncPoly) -> FuncPoly {
        apply_weyl(p, f)
    }

    fn random_function(rng: &mut ChaCha8Rng) -> FuncPoly {
        random_int_poly(Indeterminate::X, rng)
    }
}

pub struct QAction;

impl Realization for QAction {
    type Coeff = UniPoly;
    type Func = QFuncPoly;
    const KIND: AlgebraKind = AlgebraKind::QCommutative;

    fn apply(p: &NormalPoly<UniPoly>, f: &QFuncPoly) -> QFuncPoly {
        apply_q(p, f)
    }

    fn random_function(rng: &mut ChaCha8Rng) -> QFuncPoly {
        QFuncPoly::from_rational(&random_int_poly(Indeterminate::X, rng))
    }
}

pub struct CommutativeAction;

impl Realization for CommutativeAction {
    type Coeff = ExactRational;
    type Func = FuncPoly;
    const KIND: AlgebraKind = AlgebraKind::Commutative;

    fn apply(p: &NormalPoly, f: &FuncPoly) -> FuncPoly {
        apply_commutative(p, f)
    }

    fn random_function(rng: &mut ChaCha8Rng) -> FuncPoly {
        random_int_poly(Indeterminate::X, rng)
    }
}

fn assert_kind<C: crate::algebra::Coefficient>(p: &NormalPoly<C>, kind: AlgebraKind) {
    assert_eq!(p.kind(), kind, "operator of kind {} applied as {kind}", p.kind());
}

/// `sum c_ij n^i f(n + j)`
pub fn apply_shift(p: &NormalPoly, f: &SeqPoly) -> SeqPoly {
    assert_kind(p, AlgebraKind::Shift);
    let mut out = UniPoly::zero(f.indeterminate());
    for (m, c) in p.terms() {
        let moved = f.taylor_shift(i64::from(m.right));
        out = &out + &moved.shift_degree(m.left as usize).scale(c);
    }
    out
}

/// `sum c_ij x^i f^(j)(x)`
pub fn apply_weyl(p: &NormalPoly, f: &FuncPoly) -> FuncPoly {
    assert_kind(p, AlgebraKind::Weyl);
    let mut out = UniPoly::zero(f.indeterminate());
    for (m, c) in p.terms() {
        let mut g = f.clone();
        for _ in 0..m.right {
            g = g.derivative();
        }
        out = &out + &g.shift_degree(m.left as usize).scale(c);
    }
    out
}

/// `sum c_ij(q) X^i Y^j f`, where `Y` scales the `x^t` coefficient by `q^t`.
pub fn apply_q(p: &NormalPoly<UniPoly>, f: &QFuncPoly) -> QFuncPoly {
    assert_kind(p, AlgebraKind::QCommutative);
    let mut out = QFuncPoly::new(Vec::new());
    for (m, c) in p.terms() {
        let mut coeffs = vec![UniPoly::zero(Indeterminate::Q); m.left as usize];
        for (t, a) in f.coeffs.iter().enumerate() {
            let dilation = UniPoly::monomial(Indeterminate::Q, num_traits::One::one(), t * m.right as usize);
            coeffs.push(&(c * a) * &dilation);
        }
        out = out.add(&QFuncPoly::new(coeffs));
    }
    out
}

/// `sum c_ij x^i (x + 1)^j f(x)`
pub fn apply_commutative(p: &NormalPoly, f: &FuncPoly) -> FuncPoly {
    assert_kind(p, AlgebraKind::Commutative);
    let var = f.indeterminate();
    let x_plus_one = UniPoly::from_ints(var, &[1, 1]);
    let mut out = UniPoly::zero(var);
    for (m, c) in p.terms() {
        let g = &x_plus_one.pow(m.right) * f;
        out = &out + &g.shift_degree(m.left as usize).scale(c);
    }
    out
}

/// Applies `base` to `f` `r` times in sequence without forming `base^r`.
pub fn apply_iterated<R: Realization>(base: &NormalPoly<R::Coeff>, r: u32, f: &R::Func) -> R::Func {
    (0..r).fold(f.clone(), |g, _| R::apply(base, &g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub trial: u32,
    pub test_function: String,
    pub passed: bool,
}

/// Result of a randomized equivalence run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub algebra: AlgebraKind,
    pub r: u32,
    pub seed: u64,
    pub trials: Vec<TrialOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.trials.iter().all(|t| t.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialOutcome> {
        self.trials.iter().filter(|t| !t.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.trials.iter().filter(|t| t.passed).count();
        writeln!(
            f,
            "verify {} r={} seed={}: {passed}/{} trials passed",
            self.algebra,
            self.r,
            self.seed,
            self.trials.len()
        )?;
        for t in self.failures() {
            writeln!(f, "  FAIL r={} trial {}: f = {}", self.r, t.trial, t.test_function)?;
        }
        Ok(())
    }
}

/// Per-trial generator: stream `trial` of the ChaCha generator seeded by `seed`.
pub fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(trial));
    rng
}

/// Compares `expansion` against `base` applied `r` times, on `trials`
/// random test functions drawn from `(seed, trial)`.
pub fn verify_expansion<R: Realization>(
    expansion: &NormalPoly<R::Coeff>,
    base: &NormalPoly<R::Coeff>,
    r: u32,
    trials: u32,
    seed: u64,
) -> VerifyReport {
    let trials = (0..trials)
        .map(|trial| {
            let f = R::random_function(&mut trial_rng(seed, trial));
            let passed = R::apply(expansion, &f) == apply_iterated::<R>(base, r, &f);
            TrialOutcome { trial, test_function: f.to_string(), passed }
        })
        .collect();
    VerifyReport { algebra: R::KIND, r, seed, trials }
}

/// Checks the closed-form expansion of `(A + B)^r` for `kind` against the
/// operator oracle.
pub fn verify_identity(kind: AlgebraKind, r: u32, trials: u32, seed: u64) -> VerifyReport {
    match kind {
        AlgebraKind::Shift => {
            verify_expansion::<ShiftAction>(&shift_expand(r), &NormalPoly::generator_sum(kind), r, trials, seed)
        }
        AlgebraKind::Weyl => {
            verify_expansion::<WeylAction>(&weyl_expand(r), &NormalPoly::generator_sum(kind), r, trials, seed)
        }
        AlgebraKind::QCommutative => {
            verify_expansion::<QAction>(&q_binomial_expand(r), &NormalPoly::generator_sum(kind), r, trials, seed)
        }
        AlgebraKind::Commutative => verify_expansion::<CommutativeAction>(
            &binomial_expand(r),
            &NormalPoly::generator_sum(kind),
            r,
            trials,
            seed,
        ),
    }
}
