use crate::algebra::{from_powers_form, AlgebraKind, Monomial, NormalPoly, PowersOfNForm};
use crate::exactnum::{binomial, ExactRational, Indeterminate, UniPoly};

use super::compositions::enumerate_compositions;

/// `P_{r,d}(n)` as the weight-enumerator of compositions of `r - d` into
/// `d + 1` parts, each weighted by `prod_j (n + j)^(p_j)`.
///
/// Cost grows like `C(r, d)`; [`shift_p_recurrence`] is the fast path.
pub fn shift_p_compositions(r: u32, d: i64) -> UniPoly {
    if d < 0 || d > i64::from(r) {
        return UniPoly::zero(Indeterminate::N);
    }
    let d = d as u32;
    let total = r - d;
    // (n + j)^p for j <= d, p <= total
    let powers: Vec<Vec<UniPoly>> = (0..=d)
        .map(|j| {
            let base = UniPoly::new(
                Indeterminate::N,
                vec![ExactRational::from_integer(j.into()), num_traits::One::one()],
            );
            let mut row = vec![UniPoly::one(Indeterminate::N)];
            for p in 1..=total as usize {
                let next = &row[p - 1] * &base;
                row.push(next);
            }
            row
        })
        .collect();
    let mut sum = UniPoly::zero(Indeterminate::N);
    for comp in enumerate_compositions(total, d as usize + 1) {
        let weight = comp
            .parts()
            .iter()
            .enumerate()
            .fold(UniPoly::one(Indeterminate::N), |acc, (j, &p)| &acc * &powers[j][p as usize]);
        sum = &sum + &weight;
    }
    sum
}

/// Rows `0..=r` of `P_{r,d}(n)` from
/// `P_{r,d}(n) = P_{r-1,d-1}(n+1) + n P_{r-1,d}(n)`, `P_{0,0} = 1`.
///
/// `table[r'][d]` holds `P_{r',d}` for `0 <= d <= r'`.
pub fn shift_p_table(r: u32) -> Vec<Vec<UniPoly>> {
    let n = UniPoly::var(Indeterminate::N);
    let mut table: Vec<Vec<UniPoly>> = vec![vec![UniPoly::one(Indeterminate::N)]];
    for row_index in 1..=r as usize {
        let prev = &table[row_index - 1];
        let row: Vec<UniPoly> = (0..=row_index)
            .map(|d| {
                let shifted = if d > 0 { prev[d - 1].taylor_shift(1) } else { UniPoly::zero(Indeterminate::N) };
                let stay = prev.get(d).map(|p| &n * p).unwrap_or_else(|| UniPoly::zero(Indeterminate::N));
                &shifted + &stay
            })
            .collect();
        table.push(row);
    }
    table
}

/// `P_{r,d}(n)` by the recurrence; zero when `d` is outside `0..=r`.
pub fn shift_p_recurrence(r: u32, d: i64) -> UniPoly {
    if d < 0 || d > i64::from(r) {
        return UniPoly::zero(Indeterminate::N);
    }
    shift_p_table(r).swap_remove(r as usize).swap_remove(d as usize)
}

/// `(N + n)^r = sum_d P_{r,d}(n) N^d`, assembled from the recurrence.
pub fn shift_expand(r: u32) -> NormalPoly<ExactRational> {
    let row = shift_p_table(r).swap_remove(r as usize);
    from_powers_form(&PowersOfNForm::new(row))
}

/// `((n + N))^r = sum_i C(r,i) n^i N^(r-i)`: the binomial expansion as if
/// the generators commuted, read as a shift-algebra element.
pub fn pretend_commutative_power(r: u32) -> NormalPoly<ExactRational> {
    NormalPoly::from_terms(
        AlgebraKind::Shift,
        (0..=r).map(|i| (Monomial::new(i, r - i), ExactRational::from_integer(binomial(r, i64::from(i))))),
    )
}
