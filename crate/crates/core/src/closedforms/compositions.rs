use crate::exactnum::{ExactRational, Indeterminate, UniPoly};

/// An ordered split of a total into nonnegative parts `p_0, ..., p_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `prod_j (n + j)^(p_j)`
    pub fn weight(&self) -> UniPoly {
        self.parts.iter().enumerate().fold(UniPoly::one(Indeterminate::N), |acc, (j, &p)| {
            if p == 0 {
                return acc;
            }
            let base = UniPoly::new(Indeterminate::N, vec![ExactRational::from_integer(j.into()), num_traits::One::one()]);
            &acc * &base.pow(p)
        })
    }
}

/// Every composition of `total` into `parts` nonnegative parts, in
/// colexicographic order (the last part is the most significant).
pub fn enumerate_compositions(total: u32, parts: usize) -> Compositions {
    assert!(parts >= 1, "a composition needs at least one part");
    let mut first = vec![0; parts];
    first[0] = total;
    Compositions { next: Some(first) }
}

/// Iterator returned by [`enumerate_compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // successor: move one unit from the first nonzero part to its right
        // neighbour and sweep the rest of that part back to position 0
        let last = current.len() - 1;
        if let Some(k) = current.iter().position(|&p| p > 0).filter(|&k| k < last) {
            let mut succ = current.clone();
            let rest = succ[k] - 1;
            succ[k] = 0;
            succ[k + 1] += 1;
            succ[0] += rest;
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}
