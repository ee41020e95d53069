use num_traits::Zero;

use super::{AlgebraError, AlgebraKind, Monomial, NormalPoly};
use crate::exactnum::{ExactRational, Indeterminate, UniPoly};

/// A shift-algebra element grouped by powers of `N`:
/// `sum_d coeffs[d](n) * N^d`.
///
/// The last entry is nonzero; the zero element has no entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersOfNForm {
    coeffs: Vec<UniPoly>,
}

impl PowersOfNForm {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        PowersOfNForm { coeffs }
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `N^d`.
    pub fn coeff(&self, d: usize) -> UniPoly {
        self.coeffs.get(d).cloned().unwrap_or_else(|| UniPoly::zero(Indeterminate::N))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

pub fn to_powers_form(p: &NormalPoly<ExactRational>) -> Result<PowersOfNForm, AlgebraError> {
    if p.kind() != AlgebraKind::Shift {
        return Err(AlgebraError::WrongKind { expected: AlgebraKind::Shift, found: p.kind() });
    }
    let top = p.terms().keys().map(|m| m.right as usize).max();
    let Some(top) = top else {
        return Ok(PowersOfNForm::new(Vec::new()));
    };
    let mut rows: Vec<Vec<ExactRational>> = vec![Vec::new(); top + 1];
    for (m, c) in p.terms() {
        let row = &mut rows[m.right as usize];
        if row.len() <= m.left as usize {
            row.resize(m.left as usize + 1, ExactRational::zero());
        }
        row[m.left as usize] = c.clone();
    }
    Ok(PowersOfNForm::new(
        rows.into_iter().map(|c| UniPoly::new(Indeterminate::N, c)).collect(),
    ))
}

pub fn from_powers_form(form: &PowersOfNForm) -> NormalPoly<ExactRational> {
    NormalPoly::from_terms(
        AlgebraKind::Shift,
        form.coeffs.iter().enumerate().flat_map(|(d, poly)| {
            poly.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| (Monomial::new(i as u32, d as u32), c.clone()))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::exactnum::rat;

    #[test]
    fn square_regrouped() {
        let sq = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Shift).pow(2);
        let form = to_powers_form(&sq).unwrap();
        assert_eq!(
            form.coeffs(),
            &[
                UniPoly::from_ints(Indeterminate::N, &[0, 0, 1]),
                UniPoly::from_ints(Indeterminate::N, &[1, 2]),
                UniPoly::from_ints(Indeterminate::N, &[1]),
            ]
        );
    }

    #[test]
    fn zero_and_wrong_kind() {
        assert!(to_powers_form(&NormalPoly::zero(AlgebraKind::Shift)).unwrap().is_zero());
        assert_eq!(
            to_powers_form(&NormalPoly::one(AlgebraKind::Weyl)),
            Err(AlgebraError::WrongKind { expected: AlgebraKind::Shift, found: AlgebraKind::Weyl })
        );
    }

    proptest! {
        #[test]
        fn round_trip(terms in prop::collection::vec((0u32..6, 0u32..6, -9i64..=9), 0..8)) {
            let p = NormalPoly::from_terms(
                AlgebraKind::Shift,
                terms.iter().map(|&(i, j, c)| (Monomial::new(i, j), rat(c))),
            );
            let form = to_powers_form(&p).unwrap();
            prop_assert!(form.coeffs().last().is_none_or(|c| !c.is_zero()));
            prop_assert_eq!(from_powers_form(&form), p);
        }
    }
}
