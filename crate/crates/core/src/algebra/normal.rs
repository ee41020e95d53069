use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, AlgebraKind, Coefficient, Monomial};
use crate::exactnum::{binomial, factorial_u, ExactInt, ExactRational, UniPoly};

/// A polynomial in normal order, tagged with its algebra.
///
/// Terms live in a map keyed by monomial, so there is at most one entry per
/// `A^i B^j` and zero coefficients are never stored. Two values are equal
/// exactly when they have the same kind and the same canonical term list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalPoly<C: Coefficient = ExactRational> {
    kind: AlgebraKind,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> NormalPoly<C> {
    pub fn zero(kind: AlgebraKind) -> Self {
        assert!(
            C::admits(kind),
            "{kind} polynomials need coefficients that contain q"
        );
        NormalPoly { kind, terms: BTreeMap::new() }
    }

    pub fn one(kind: AlgebraKind) -> Self {
        Self::term(kind, Monomial::ONE, C::one())
    }

    /// `c * A^i B^j`
    pub fn term(kind: AlgebraKind, m: Monomial, c: C) -> Self {
        Self::from_terms(kind, [(m, c)])
    }

    pub fn constant(kind: AlgebraKind, c: C) -> Self {
        Self::term(kind, Monomial::ONE, c)
    }

    /// The left generator `A` (x or n).
    pub fn left_generator(kind: AlgebraKind) -> Self {
        Self::term(kind, Monomial::new(1, 0), C::one())
    }

    /// The right generator `B` (y, D or N).
    pub fn right_generator(kind: AlgebraKind) -> Self {
        Self::term(kind, Monomial::new(0, 1), C::one())
    }

    /// `A + B`, the base of every binomial power.
    pub fn generator_sum(kind: AlgebraKind) -> Self {
        &Self::left_generator(kind) + &Self::right_generator(kind)
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(kind: AlgebraKind, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(kind);
        for (m, c) in terms {
            p.accumulate(m, &c);
        }
        p
    }

    fn accumulate(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.plus(c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `i + j` over the stored terms; `None` stands for the
    /// conventional degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// The same terms read in another algebra. Used for commutative images:
    /// both sides are in normal order, so only the tag changes.
    pub fn as_kind(&self, kind: AlgebraKind) -> Self {
        let mut p = Self::zero(kind);
        p.terms = self.terms.clone();
        p
    }

    pub fn map_coeffs<D: Coefficient>(&self, kind: AlgebraKind, f: impl Fn(&C) -> D) -> NormalPoly<D> {
        NormalPoly::from_terms(kind, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.kind, self.terms.iter().map(|(m, a)| (*m, a.times(c))))
    }

    fn check_kind(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(AlgebraError::KindMismatch { left: self.kind, right: other.kind })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(*m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&-other)
    }

    /// Noncommutative product: `(A^a B^b)(A^c B^d) = A^a reorder(b, c) B^d`
    /// extended bilinearly.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_kind(other)?;
        let mut out = Self::zero(self.kind);
        let mut swaps: HashMap<(u32, u32), NormalPoly<C>> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c12 = c1.times(c2);
                let middle = swaps
                    .entry((m1.right, m2.left))
                    .or_insert_with(|| reorder(self.kind, m1.right, m2.left));
                for (m, c) in &middle.terms {
                    let key = Monomial::new(m1.left + m.left, m.right + m2.right);
                    out.accumulate(key, &c12.times(c));
                }
            }
        }
        Ok(out)
    }

    /// `self^r` by repeated left multiplication, `self * self^(r-1)`.
    pub fn pow(&self, r: u32) -> Self {
        let mut acc = Self::one(self.kind);
        for _ in 0..r {
            acc = self * &acc;
        }
        acc
    }

    /// Terms of total degree exactly `m`.
    pub fn homogeneous_component(&self, m: u32) -> Self {
        let mut p = Self::zero(self.kind);
        p.terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.total_degree() == m)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        p
    }

    /// Terms by total degree descending, ties broken by left exponent
    /// descending. Printing and hashing go through this order.
    pub fn canonical_terms(&self) -> Vec<(Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|(a, _), (b, _)| {
            b.total_degree()
                .cmp(&a.total_degree())
                .then(b.left.cmp(&a.left))
        });
        v
    }
}

impl NormalPoly<UniPoly> {
    /// The commutative polynomial obtained by setting `q = 1`.
    pub fn at_q_one(&self) -> NormalPoly<ExactRational> {
        let one = num_traits::One::one();
        self.map_coeffs(AlgebraKind::Commutative, |c| c.eval(&one))
    }
}

impl<C: Coefficient> Hash for NormalPoly<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind.hash(state);
        for (m, c) in self.canonical_terms() {
            m.hash(state);
            c.hash(state);
        }
    }
}

/// Normal form of `B^j A^i` in the given algebra.
///
/// Closed forms, each equal to iterating the defining relation:
/// - commutative: `A^i B^j`
/// - q-commutative: `q^(ij) A^i B^j`
/// - shift: `(n + j)^i N^j = sum_t C(i,t) j^(i-t) n^t N^j`
/// - Weyl: `sum_t t! C(i,t) C(j,t) x^(i-t) D^(j-t)`
pub fn reorder<C: Coefficient>(kind: AlgebraKind, right_exp: u32, left_exp: u32) -> NormalPoly<C> {
    let (i, j) = (left_exp, right_exp);
    match kind {
        AlgebraKind::Commutative => NormalPoly::term(kind, Monomial::new(i, j), C::one()),
        AlgebraKind::QCommutative => {
            let q = C::q_power(u64::from(i) * u64::from(j))
                .expect("q-commutative reorder needs q in the coefficient ring");
            NormalPoly::term(kind, Monomial::new(i, j), q)
        }
        AlgebraKind::Shift => {
            let jj = ExactInt::from(j);
            NormalPoly::from_terms(
                kind,
                (0..=i).map(|t| {
                    let c = binomial(i, i64::from(t)) * num_traits::pow(jj.clone(), (i - t) as usize);
                    (Monomial::new(t, j), C::from_int(c))
                }),
            )
        }
        AlgebraKind::Weyl => NormalPoly::from_terms(
            kind,
            (0..=i.min(j)).map(|t| {
                let c = factorial_u(t) * binomial(i, i64::from(t)) * binomial(j, i64::from(t));
                (Monomial::new(i - t, j - t), C::from_int(c))
            }),
        ),
    }
}

impl<C: Coefficient> Add for &NormalPoly<C> {
    type Output = NormalPoly<C>;

    /// Panics on mismatched kinds; see [`NormalPoly::checked_add`].
    fn add(self, rhs: &NormalPoly<C>) -> NormalPoly<C> {
        self.checked_add(rhs).expect("normal-form add")
    }
}

impl<C: Coefficient> Sub for &NormalPoly<C> {
    type Output = NormalPoly<C>;

    fn sub(self, rhs: &NormalPoly<C>) -> NormalPoly<C> {
        self.checked_sub(rhs).expect("normal-form sub")
    }
}

impl<C: Coefficient> Mul for &NormalPoly<C> {
    type Output = NormalPoly<C>;

    fn mul(self, rhs: &NormalPoly<C>) -> NormalPoly<C> {
        self.checked_mul(rhs).expect("normal-form mul")
    }
}

impl<C: Coefficient> Neg for &NormalPoly<C> {
    type Output = NormalPoly<C>;

    fn neg(self) -> NormalPoly<C> {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = c.negate();
        }
        p
    }
}
