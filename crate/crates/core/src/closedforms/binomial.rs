use num_traits::{One, Zero};

use crate::algebra::{AlgebraKind, Monomial, NormalPoly};
use crate::exactnum::{binomial, factorial_u, ExactInt, ExactRational, Indeterminate, UniPoly};

/// `sum_i C(r,i) x^i y^(r-i)` in the commutative algebra.
pub fn binomial_expand(r: u32) -> NormalPoly<ExactRational> {
    NormalPoly::from_terms(
        AlgebraKind::Commutative,
        (0..=r).map(|i| {
            (Monomial::new(i, r - i), ExactRational::from_integer(binomial(r, i64::from(i))))
        }),
    )
}

/// `[j] = 1 + q + ... + q^(j-1)`
pub fn q_integer(j: u32) -> UniPoly {
    UniPoly::from_ints(Indeterminate::Q, &vec![1; j as usize])
}

/// Gaussian binomial `[r choose i]_q`, built from the q-Pascal rule
/// `G(r,i) = G(r-1,i-1) + q^i G(r-1,i)` without any division.
pub fn gaussian_binomial(r: u32, i: i64) -> UniPoly {
    if i < 0 || i > i64::from(r) {
        return UniPoly::zero(Indeterminate::Q);
    }
    let i = i as usize;
    // row[k] = G(row_index, k)
    let mut row = vec![UniPoly::one(Indeterminate::Q)];
    for _ in 0..r {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=row.len() {
            let from_left = if k > 0 { row[k - 1].clone() } else { UniPoly::zero(Indeterminate::Q) };
            let from_above = row.get(k).map(|g| g.shift_degree(k)).unwrap_or_else(|| UniPoly::zero(Indeterminate::Q));
            next.push(&from_left + &from_above);
        }
        row = next;
    }
    row.swap_remove(i)
}

/// q-factorials `[0]!, [1]!, ..., [max]!`.
#[derive(Debug, Clone)]
pub struct QFactorialTable {
    values: Vec<UniPoly>,
}

impl QFactorialTable {
    pub fn new(max: u32) -> Self {
        let mut values = vec![UniPoly::one(Indeterminate::Q)];
        for j in 1..=max {
            let next = &values[j as usize - 1] * &q_integer(j);
            values.push(next);
        }
        QFactorialTable { values }
    }

    /// `[j]!`; panics past the table size.
    pub fn get(&self, j: u32) -> &UniPoly {
        &self.values[j as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `[r]! / ([i]! [r-i]!)` by exact polynomial division.
    pub fn gaussian_quotient(&self, r: u32, i: u32) -> UniPoly {
        let denom = self.get(i) * self.get(r - i);
        let (quot, rem) = self.get(r).div_rem(&denom);
        assert!(rem.is_zero(), "[{r}]! not divisible by [{i}]![{}]!", r - i);
        quot
    }
}

/// `sum_i [r choose i]_q x^i y^(r-i)` in the q-commutative algebra.
pub fn q_binomial_expand(r: u32) -> NormalPoly<UniPoly> {
    NormalPoly::from_terms(
        AlgebraKind::QCommutative,
        (0..=r).map(|i| (Monomial::new(i, r - i), gaussian_binomial(r, i64::from(i)))),
    )
}

/// `(x + D)^r = sum_k sum_(j+l = r-2k) r! / (2^k k! j! l!) x^j D^l`.
///
/// Panics if some coefficient is not an integer; they always are.
pub fn weyl_expand(r: u32) -> NormalPoly<ExactRational> {
    let r_fact = factorial_u(r);
    let mut terms = Vec::new();
    for k in 0..=r / 2 {
        let outer = ExactRational::new(r_fact.clone(), (ExactInt::one() << k) * factorial_u(k));
        let rest = r - 2 * k;
        for j in 0..=rest {
            let l = rest - j;
            let c = &outer / ExactRational::from_integer(factorial_u(j) * factorial_u(l));
            assert!(c.is_integer(), "non-integral coefficient {c} on x^{j} D^{l} for r = {r}");
            if !c.is_zero() {
                terms.push((Monomial::new(j, l), c));
            }
        }
    }
    NormalPoly::from_terms(AlgebraKind::Weyl, terms)
}
