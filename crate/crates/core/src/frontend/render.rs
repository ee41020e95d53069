use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{json, AnyPoly};
use crate::algebra::{to_powers_form, AlgebraKind, Coefficient, Monomial, NormalPoly};
use crate::exactnum::{ExactRational, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderStyle {
    #[default]
    Text,
    Latex,
    Json,
}

impl FromStr for RenderStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(RenderStyle::Text),
            "latex" => Ok(RenderStyle::Latex),
            "json" => Ok(RenderStyle::Json),
            other => Err(format!("unknown format `{other}` (expected text, latex or json)")),
        }
    }
}

/// Renders in the given style. Shift-algebra text output is grouped by
/// powers of `N`; use [`render_text`] with `raw = true` for flat terms.
pub fn render(p: &AnyPoly, style: RenderStyle) -> String {
    match style {
        RenderStyle::Text => render_text(p, false),
        RenderStyle::Latex => render_latex(p),
        RenderStyle::Json => json::to_json(p),
    }
}

/// One signed summand: `negative` says whether to print it with a minus.
struct Piece {
    negative: bool,
    body: String,
}

fn join(pieces: Vec<Piece>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, p) in pieces.into_iter().enumerate() {
        match (k, p.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&p.body);
    }
    out
}

fn monomial_text(kind: AlgebraKind, m: Monomial) -> String {
    let (a, b) = kind.generators();
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [part(a, m.left), part(b, m.right)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Prefixes `body` (possibly empty) with a coefficient string.
fn with_coeff(coeff: Option<String>, body: String) -> String {
    match (coeff, body.is_empty()) {
        (None, true) => "1".to_string(),
        (None, false) => body,
        (Some(c), true) => c,
        (Some(c), false) => format!("{c}*{body}"),
    }
}

/// Sign, and coefficient text unless it is 1.
trait TextCoeff {
    fn text_piece(&self) -> (bool, Option<String>);
    fn latex_piece(&self) -> (bool, Option<String>);
}

impl TextCoeff for ExactRational {
    fn text_piece(&self) -> (bool, Option<String>) {
        let mag = self.abs();
        (self.is_negative(), (!mag.is_one()).then(|| mag.to_string()))
    }

    fn latex_piece(&self) -> (bool, Option<String>) {
        let mag = self.abs();
        (self.is_negative(), (!mag.is_one()).then(|| latex_rational(&mag)))
    }
}

impl TextCoeff for UniPoly {
    fn text_piece(&self) -> (bool, Option<String>) {
        if self.term_count() == 1 {
            let negative = self.leading_coeff().is_some_and(|c| c.is_negative());
            let mag = if negative { -self } else { self.clone() };
            (negative, (!mag.is_one()).then(|| mag.to_string()))
        } else {
            (false, Some(format!("({self})")))
        }
    }

    fn latex_piece(&self) -> (bool, Option<String>) {
        if self.term_count() == 1 {
            let negative = self.leading_coeff().is_some_and(|c| c.is_negative());
            let mag = if negative { -self } else { self.clone() };
            (negative, (!mag.is_one()).then(|| latex_poly(&mag)))
        } else {
            (false, Some(format!("\\left({}\\right)", latex_poly(self))))
        }
    }
}

fn flat_text<C: Coefficient + TextCoeff>(p: &NormalPoly<C>) -> String {
    join(
        p.canonical_terms()
            .into_iter()
            .map(|(m, c)| {
                let (negative, coeff) = c.text_piece();
                Piece { negative, body: with_coeff(coeff, monomial_text(p.kind(), m)) }
            })
            .collect(),
    )
}

/// `sum_d P_d(n) N^d`, highest `d` first.
fn powers_of_n_text(p: &NormalPoly<ExactRational>) -> String {
    let form = to_powers_form(p).expect("shift polynomial");
    let mut pieces = Vec::new();
    for (d, poly) in form.coeffs().iter().enumerate().rev() {
        if poly.is_zero() {
            continue;
        }
        let n_power = monomial_text(AlgebraKind::Shift, Monomial::new(0, d as u32));
        if poly.term_count() == 1 || d == 0 {
            // single term, or the N^0 group, which needs no parentheses
            for (i, c) in poly.coeffs().iter().enumerate().rev() {
                if Zero::is_zero(c) {
                    continue;
                }
                let (negative, coeff) = c.text_piece();
                let m = monomial_text(AlgebraKind::Shift, Monomial::new(i as u32, d as u32));
                pieces.push(Piece { negative, body: with_coeff(coeff, m) });
            }
        } else {
            pieces.push(Piece { negative: false, body: format!("({poly})*{n_power}") });
        }
    }
    join(pieces)
}

/// Plain text with explicit `*`; the output parses back to the same value
/// whenever all coefficients are integers.
pub fn render_text(p: &AnyPoly, raw: bool) -> String {
    match p {
        AnyPoly::Rational(p) if p.kind() == AlgebraKind::Shift && !raw => powers_of_n_text(p),
        AnyPoly::Rational(p) => flat_text(p),
        AnyPoly::Q(p) => flat_text(p),
    }
}

fn latex_rational(c: &ExactRational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn latex_power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{{{e}}}")),
    }
}

fn latex_poly(p: &UniPoly) -> String {
    let var = p.indeterminate().symbol();
    let pieces = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !Zero::is_zero(*c))
        .map(|(k, c)| {
            let (negative, coeff) = c.latex_piece();
            let body = match (coeff, latex_power(var, k as u32)) {
                (None, None) => "1".to_string(),
                (Some(c), None) => c,
                (None, Some(v)) => v,
                (Some(c), Some(v)) => format!("{c} {v}"),
            };
            Piece { negative, body }
        })
        .collect();
    join(pieces)
}

fn flat_latex<C: Coefficient + TextCoeff>(p: &NormalPoly<C>) -> String {
    let (a, b) = p.kind().generators();
    join(
        p.canonical_terms()
            .into_iter()
            .map(|(m, c)| {
                let (negative, coeff) = c.latex_piece();
                let mono: String = [latex_power(a, m.left), latex_power(b, m.right)].into_iter().flatten().collect();
                let body = match (coeff, mono.is_empty()) {
                    (None, true) => "1".to_string(),
                    (None, false) => mono,
                    (Some(c), true) => c,
                    (Some(c), false) => format!("{c} {mono}"),
                };
                Piece { negative, body }
            })
            .collect(),
    )
}

/// Flat LaTeX in canonical term order, monomials as `n^{i}N^{j}`.
pub fn render_latex(p: &AnyPoly) -> String {
    match p {
        AnyPoly::Rational(p) => flat_latex(p),
        AnyPoly::Q(p) => flat_latex(p),
    }
}
