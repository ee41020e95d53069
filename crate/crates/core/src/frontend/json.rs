use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::AnyPoly;
use crate::algebra::{AlgebraKind, Monomial, NormalPoly};
use crate::exactnum::{ExactRational, Indeterminate, UniPoly};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error("{0} coefficients do not fit the {1} algebra")]
    CoefficientShape(&'static str, AlgebraKind),
}

#[derive(Serialize, Deserialize)]
struct Doc {
    schema: u32,
    algebra: AlgebraKind,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    left: u32,
    right: u32,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Scalar(String),
    Q { qpoly: Vec<String> },
}

/// `{"schema": 1, "algebra": .., "terms": [{"left", "right", "coeff"}, ..]}`
/// with terms in canonical order and coefficients as decimal strings.
pub fn to_json(p: &AnyPoly) -> String {
    let terms = match p {
        AnyPoly::Rational(p) => p
            .canonical_terms()
            .into_iter()
            .map(|(m, c)| Term { left: m.left, right: m.right, coeff: Coeff::Scalar(c.to_string()) })
            .collect(),
        AnyPoly::Q(p) => p
            .canonical_terms()
            .into_iter()
            .map(|(m, c)| Term {
                left: m.left,
                right: m.right,
                coeff: Coeff::Q { qpoly: c.coeffs().iter().map(ToString::to_string).collect() },
            })
            .collect(),
    };
    let doc = Doc { schema: SCHEMA_VERSION, algebra: p.kind(), terms };
    serde_json::to_string(&doc).expect("serializable")
}

fn rational(s: &str) -> Result<ExactRational, JsonError> {
    let c = ExactRational::from_str(s).map_err(|_| JsonError::Coefficient(s.to_string()))?;
    Ok(c)
}

pub fn from_json(text: &str) -> Result<AnyPoly, JsonError> {
    let doc: Doc = serde_json::from_str(text)?;
    if doc.schema != SCHEMA_VERSION {
        return Err(JsonError::Schema(doc.schema));
    }
    let kind = doc.algebra;
    if kind.has_q() {
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            let Coeff::Q { qpoly } = t.coeff else {
                return Err(JsonError::CoefficientShape("scalar", kind));
            };
            let coeffs = qpoly.iter().map(|s| rational(s)).collect::<Result<_, _>>()?;
            terms.push((Monomial::new(t.left, t.right), UniPoly::new(Indeterminate::Q, coeffs)));
        }
        Ok(AnyPoly::Q(NormalPoly::from_terms(kind, terms)))
    } else {
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            let Coeff::Scalar(s) = t.coeff else {
                return Err(JsonError::CoefficientShape("q-polynomial", kind));
            };
            terms.push((Monomial::new(t.left, t.right), rational(&s)?));
        }
        Ok(AnyPoly::Rational(NormalPoly::from_terms(kind, terms)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{q_binomial_expand, shift_expand};

    #[test]
    fn shift_square_document() {
        let text = to_json(&AnyPoly::from(shift_expand(2)));
        assert_eq!(
            text,
            r#"{"schema":1,"algebra":"shift","terms":[{"left":2,"right":0,"coeff":"1"},{"left":1,"right":1,"coeff":"2"},{"left":0,"right":2,"coeff":"1"},{"left":0,"right":1,"coeff":"1"}]}"#
        );
    }

    #[test]
    fn q_document() {
        let text = to_json(&AnyPoly::from(q_binomial_expand(2)));
        assert!(text.contains(r#"{"left":1,"right":1,"coeff":{"qpoly":["1","1"]}}"#), "{text}");
        assert_eq!(from_json(&text).unwrap(), AnyPoly::from(q_binomial_expand(2)));
    }

    #[test]
    fn big_and_fractional_coefficients_survive() {
        let big: ExactRational = "123456789012345678901234567890/7".parse().unwrap();
        let p = AnyPoly::from(NormalPoly::term(AlgebraKind::Weyl, Monomial::new(3, 1), big));
        assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(from_json("{"), Err(JsonError::Syntax(_))));
        assert!(matches!(
            from_json(r#"{"schema":2,"algebra":"shift","terms":[]}"#),
            Err(JsonError::Schema(2))
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"algebra":"shift","terms":[{"left":0,"right":0,"coeff":"x"}]}"#),
            Err(JsonError::Coefficient(_))
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"algebra":"q","terms":[{"left":0,"right":0,"coeff":"1"}]}"#),
            Err(JsonError::CoefficientShape(..))
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"algebra":"weyl","terms":[{"left":0,"right":0,"coeff":{"qpoly":["1"]}}]}"#),
            Err(JsonError::CoefficientShape(..))
        ));
    }
}
