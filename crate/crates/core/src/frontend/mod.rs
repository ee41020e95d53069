//! Text front end: expression parsing and evaluation, and the three output
//! styles (plain text, LaTeX, JSON).

mod json;
mod parse;
mod render;

pub use json::{from_json, to_json, JsonError, SCHEMA_VERSION};
pub use parse::{parse, Expr, Generator, ParseError, ParseErrorKind};
pub use render::{render, render_latex, render_text, RenderStyle};

use crate::algebra::{AlgebraKind, Coefficient, NormalPoly};
use crate::exactnum::{ExactRational, UniPoly};

/// A normal-form polynomial of any algebra: rational coefficients for the
/// commutative, Weyl and shift algebras, q-polynomials for the q-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyPoly {
    Rational(NormalPoly<ExactRational>),
    Q(NormalPoly<UniPoly>),
}

impl AnyPoly {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            AnyPoly::Rational(p) => p.kind(),
            AnyPoly::Q(p) => p.kind(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AnyPoly::Rational(p) => p.is_zero(),
            AnyPoly::Q(p) => p.is_zero(),
        }
    }
}

impl From<NormalPoly<ExactRational>> for AnyPoly {
    fn from(p: NormalPoly<ExactRational>) -> Self {
        AnyPoly::Rational(p)
    }
}

impl From<NormalPoly<UniPoly>> for AnyPoly {
    fn from(p: NormalPoly<UniPoly>) -> Self {
        AnyPoly::Q(p)
    }
}

/// Evaluates a parsed expression bottom-up; products multiply in written
/// order.
pub fn eval_expr(e: &Expr, kind: AlgebraKind) -> AnyPoly {
    if kind.has_q() {
        AnyPoly::Q(eval_in::<UniPoly>(e, kind))
    } else {
        AnyPoly::Rational(eval_in::<ExactRational>(e, kind))
    }
}

fn eval_in<C: Coefficient>(e: &Expr, kind: AlgebraKind) -> NormalPoly<C> {
    match e {
        Expr::Var(Generator::Left) => NormalPoly::left_generator(kind),
        Expr::Var(Generator::Right) => NormalPoly::right_generator(kind),
        Expr::Int(n) => NormalPoly::constant(kind, C::from_int(n.clone())),
        Expr::Q => NormalPoly::constant(kind, C::q_power(1).expect("q parsed outside the q-algebra")),
        Expr::Sum(a, b) => &eval_in::<C>(a, kind) + &eval_in::<C>(b, kind),
        Expr::Difference(a, b) => &eval_in::<C>(a, kind) - &eval_in::<C>(b, kind),
        Expr::Product(a, b) => &eval_in::<C>(a, kind) * &eval_in::<C>(b, kind),
        Expr::Power(a, r) => eval_in::<C>(a, kind).pow(*r),
        Expr::Negation(a) => -&eval_in::<C>(a, kind),
    }
}

/// Parses and evaluates in one step.
pub fn normalize(text: &str, kind: AlgebraKind) -> Result<AnyPoly, ParseError> {
    Ok(eval_expr(&parse(text, kind)?, kind))
}
