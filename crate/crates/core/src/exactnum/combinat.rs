use num_traits::{One, Zero};

use super::{ExactError, ExactInt};

/// `k!`, rejecting negative arguments.
pub fn factorial(k: i64) -> Result<ExactInt, ExactError> {
    if k < 0 {
        return Err(ExactError::NegativeFactorial(k));
    }
    Ok(factorial_u(k as u32))
}

/// `k!` for an index already known to be nonnegative.
pub fn factorial_u(k: u32) -> ExactInt {
    (2..=k).fold(ExactInt::one(), |acc, i| acc * i)
}

/// `C(a, b)`, zero whenever `b` falls outside `0..=a`.
pub fn binomial(a: u32, b: i64) -> ExactInt {
    if b < 0 || b > i64::from(a) {
        return ExactInt::zero();
    }
    // multiplicative formula on the smaller side; each partial product is a binomial
    let b = (b as u32).min(a - b as u32);
    let mut acc = ExactInt::one();
    for t in 0..b {
        acc = acc * (a - t) / (t + 1);
    }
    acc
}

/// Stirling number of the second kind, `S(r, d)`.
pub fn stirling2(r: u32, d: u32) -> ExactInt {
    if d > r {
        return ExactInt::zero();
    }
    // row[k] holds S(row, k)
    let mut row = vec![ExactInt::zero(); d as usize + 1];
    row[0] = ExactInt::one();
    for n in 1..=r {
        let top = (n.min(d)) as usize;
        for k in (1..=top).rev() {
            row[k] = &row[k] * ExactInt::from(k) + &row[k - 1];
        }
        row[0] = ExactInt::zero();
    }
    row[d as usize].clone()
}
