use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, ExactError, ExactInt, ExactRational};

/// Name of a polynomial's variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Indeterminate {
    /// Sequence index, the argument of `P_{r,d}(n)`.
    N,
    /// Quantum parameter.
    Q,
    /// Function argument for differential operators.
    X,
    /// Exponent of a binomial power, used by recovered layer formulas.
    R,
}

impl Indeterminate {
    pub fn symbol(self) -> &'static str {
        match self {
            Indeterminate::N => "n",
            Indeterminate::Q => "q",
            Indeterminate::X => "x",
            Indeterminate::R => "r",
        }
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `var^k`. The last stored coefficient is
/// never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Indeterminate,
    coeffs: Vec<ExactRational>,
}

impl UniPoly {
    pub fn new(var: Indeterminate, coeffs: Vec<ExactRational>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: Indeterminate, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero(var: Indeterminate) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Indeterminate) -> Self {
        Self::constant(var, ExactRational::one())
    }

    pub fn constant(var: Indeterminate, c: ExactRational) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^k`
    pub fn monomial(var: Indeterminate, c: ExactRational, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// The polynomial `var`.
    pub fn var(var: Indeterminate) -> Self {
        Self::monomial(var, ExactRational::one(), 1)
    }

    pub fn indeterminate(&self) -> Indeterminate {
        self.var
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `var^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Same coefficients under another variable name.
    pub fn rename(&self, var: Indeterminate) -> Self {
        UniPoly { var, coeffs: self.coeffs.clone() }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn check_var(&self, other: &UniPoly) -> Result<(), ExactError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ExactError::IndeterminateMismatch { left: self.var, right: other.var })
        }
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly, ExactError> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Ok(UniPoly::new(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly, ExactError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly, ExactError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(self.var));
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(UniPoly::new(self.var, coeffs))
    }

    pub fn scale(&self, c: &ExactRational) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift_degree(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { var: self.var, coeffs }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(var + c)`, expanded.
    ///
    /// Accumulates `a_k (var + c)^k` term by term using binomial coefficients.
    pub fn taylor_shift(&self, c: i64) -> UniPoly {
        if c == 0 || self.is_zero() {
            return self.clone();
        }
        let c = ExactRational::from_integer(ExactInt::from(c));
        let n = self.coeffs.len();
        let mut out = vec![ExactRational::zero(); n];
        // powers of c up to the degree
        let mut cpow = Vec::with_capacity(n);
        cpow.push(ExactRational::one());
        for k in 1..n {
            let next = &cpow[k - 1] * &c;
            cpow.push(next);
        }
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, slot) in out.iter_mut().enumerate().take(k + 1) {
                let b = ExactRational::from_integer(binomial(k as u32, t as i64));
                *slot += a * b * &cpow[k - t];
            }
        }
        UniPoly::new(self.var, out)
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * v + c)
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * ExactRational::from_integer(ExactInt::from(k)))
            .collect();
        UniPoly::new(self.var, coeffs)
    }

    /// Multiply the coefficient of `var^t` by `w^t`, i.e. `p(w * var)`.
    pub fn dilate(&self, w: &ExactRational) -> UniPoly {
        let mut pw = ExactRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &pw);
            pw *= w;
        }
        UniPoly::new(self.var, coeffs)
    }

    /// Euclidean division. Panics on a zero divisor or mismatched variables.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        self.check_var(divisor).expect("div_rem on mismatched indeterminates");
        let lead = divisor.leading_coeff().expect("division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.var), self.clone());
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        (UniPoly::new(self.var, quot), UniPoly::new(self.var, rem))
    }
}

/// The unique polynomial of degree below `points.len()` through every point.
///
/// Newton divided differences over the rationals.
pub fn interpolate(
    var: Indeterminate,
    points: &[(ExactRational, ExactRational)],
) -> Result<UniPoly, ExactError> {
    if points.is_empty() {
        return Err(ExactError::NoPoints);
    }
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| b == a) {
            return Err(ExactError::DuplicateAbscissa(a.clone()));
        }
    }
    let xs: Vec<&ExactRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<ExactRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = table.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // nested form: c0 + (v - x0)(c1 + (v - x1)(c2 + ...))
    let mut acc = UniPoly::zero(var);
    for i in (0..n).rev() {
        let linear = UniPoly::new(var, vec![-xs[i].clone(), ExactRational::one()]);
        acc = &(&acc * &linear) + &UniPoly::constant(var, table[i].clone());
    }
    Ok(acc)
}

impl Add for &UniPoly {
    type Output = UniPoly;

    /// Panics on mismatched indeterminates; see [`UniPoly::checked_add`].
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Descending powers with explicit `*`, e.g. `3*n^2 + 3*n + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => self.var.symbol().to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            match (mag.is_one(), power.is_empty()) {
                (true, false) => f.write_str(&power)?,
                (_, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}
