use std::fmt;

use thiserror::Error;

use super::shift::pretend_commutative_power;
use crate::algebra::{AlgebraKind, Monomial, NormalPoly};
use crate::exactnum::{binomial, interpolate, ExactError, ExactRational, Indeterminate, UniPoly};

type P = NormalPoly<ExactRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayerError {
    #[error("layer index must be positive")]
    ZeroLayer,
    #[error("r = {r} is below the minimum {min} for layer m = {m}")]
    SampleTooSmall { r: u32, m: u32, min: u32 },
    #[error("at least two sample exponents are needed, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Interpolation(#[from] ExactError),
    #[error("layer r - {m} at r = {r} does not factor as C(r,{}) N ((N+n))^(r-{}) Q: {reason}", m + 1, 2 * m)]
    StructureViolation { r: u32, m: u32, reason: String },
    #[error("coefficient {s} of layer m = {m} did not stabilize over the samples; add more sample exponents")]
    Unstable { m: u32, s: usize },
    #[error("recovered formula for layer m = {m} disagrees with the computed layer at held-out r = {r}")]
    HoldoutMismatch { r: u32, m: u32 },
    #[error("assembled layer m = {m} at r = {r} has a non-integral coefficient")]
    NonIntegral { r: u32, m: u32 },
}

/// Homogeneous components of `(N + n)^r` at total degrees `r, r-1, ..., r-k`.
///
/// `k` counts layers below the top, so `k = 0` returns the top layer alone
/// and the result holds `min(k, r) + 1` layers. This matches reading the
/// request as "all terms of degree at least `r - k`".
pub fn layer_decomposition(r: u32, k: u32) -> Vec<P> {
    let full = P::generator_sum(AlgebraKind::Shift).pow(r);
    (0..=k.min(r)).map(|t| full.homogeneous_component(r - t)).collect()
}

/// The `count` highest total-degree layers, top first. Same data as
/// [`layer_decomposition`] with `k = count - 1`.
pub fn top_layers(r: u32, count: u32) -> Vec<P> {
    match count {
        0 => Vec::new(),
        c => layer_decomposition(r, c - 1),
    }
}

/// Layer `r - m` of `(N + n)^r` as a formula in `r`:
///
/// `C(r, m+1) * N * ((N+n))^(r-2m) * sum_s q_s(r) n^s N^(m-1-s)`
///
/// with all products commutative and the result written n-before-N.
/// `q_coeffs[s]` multiplies `n^s N^(m-1-s)`, so the list runs from the pure
/// `N` part to the pure `n` part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerFormula {
    pub m: u32,
    pub q_coeffs: Vec<UniPoly>,
}

impl LayerFormula {
    /// Lower index of the binomial prefactor `C(r, m+1)`.
    pub fn leading_index(&self) -> u32 {
        self.m + 1
    }

    /// Smallest `r` at which the formula makes sense.
    pub fn min_r(&self) -> u32 {
        2 * self.m
    }

    /// The layer predicted at exponent `r`, as a shift-algebra element.
    pub fn assemble(&self, r: u32) -> Result<P, LayerError> {
        if r < self.min_r() {
            return Err(LayerError::SampleTooSmall { r, m: self.m, min: self.min_r() });
        }
        let rv = ExactRational::from_integer(r.into());
        let inner = P::from_terms(
            AlgebraKind::Commutative,
            self.q_coeffs
                .iter()
                .enumerate()
                .map(|(s, q)| (Monomial::new(s as u32, self.m - 1 - s as u32), q.eval(&rv))),
        );
        let layer = (&layer_divisor(r, self.m) * &inner).as_kind(AlgebraKind::Shift);
        if layer.terms().values().any(|c| !c.is_integer()) {
            return Err(LayerError::NonIntegral { r, m: self.m });
        }
        Ok(layer)
    }
}

impl fmt::Display for LayerFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "layer r-{m} = C(r, {lead})*N*((N + n))^(r - {e})",
            m = self.m,
            lead = self.leading_index(),
            e = 2 * self.m
        )?;
        let parts: Vec<String> = self
            .q_coeffs
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(s, q)| {
                let mono = shift_monomial(s as u32, self.m - 1 - s as u32);
                match (q.is_one(), mono.is_empty(), q.term_count()) {
                    (true, true, _) => "1".to_string(),
                    (true, false, _) => mono,
                    (false, true, _) => format!("({q})"),
                    (false, false, 1) if q.degree() == Some(0) => format!("{q}*{mono}"),
                    (false, false, _) => format!("({q})*{mono}"),
                }
            })
            .collect();
        match parts.len() {
            0 => write!(f, "*0"),
            1 if parts[0] == "1" => Ok(()),
            _ => write!(f, "*({})", parts.join(" + ")),
        }
    }
}

fn shift_monomial(i: u32, j: u32) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [part("n", i), part("N", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// `C(r, m+1) * N * (N + n)^(r - 2m)`, commutative.
fn layer_divisor(r: u32, m: u32) -> P {
    let lead = ExactRational::from_integer(binomial(r, i64::from(m) + 1));
    let power = pretend_commutative_power(r - 2 * m).as_kind(AlgebraKind::Commutative);
    let n_times = P::term(AlgebraKind::Commutative, Monomial::new(0, 1), lead);
    &n_times * &power
}

/// Exact quotient of commutative bivariate polynomials, or `None` when the
/// division leaves a remainder. Lex order on `(n-exponent, N-exponent)`.
fn divide_exact(dividend: &P, divisor: &P) -> Option<P> {
    let (dm, dc) = divisor.terms().last_key_value()?;
    let mut rem = dividend.clone();
    let mut quot = P::zero(AlgebraKind::Commutative);
    while let Some((lm, lc)) = rem.terms().last_key_value() {
        if lm.left < dm.left || lm.right < dm.right {
            return None;
        }
        let t = P::term(
            AlgebraKind::Commutative,
            Monomial::new(lm.left - dm.left, lm.right - dm.right),
            lc / dc,
        );
        rem = &rem - &(&t * divisor);
        quot = &quot + &t;
    }
    Some(quot)
}

/// Reads `Q` off layer `r - m` of `(N + n)^r`: returns its coefficients on
/// `n^s N^(m-1-s)` for `s = 0..m`.
fn layer_quotient(full: &P, r: u32, m: u32) -> Result<Vec<ExactRational>, LayerError> {
    let layer = full.homogeneous_component(r - m).as_kind(AlgebraKind::Commutative);
    let quot = divide_exact(&layer, &layer_divisor(r, m)).ok_or_else(|| LayerError::StructureViolation {
        r,
        m,
        reason: "division leaves a remainder".to_string(),
    })?;
    if let Some(stray) = quot.terms().keys().find(|k| k.total_degree() != m - 1) {
        return Err(LayerError::StructureViolation {
            r,
            m,
            reason: format!("quotient has a term n^{} N^{} outside degree {}", stray.left, stray.right, m - 1),
        });
    }
    Ok((0..m).map(|s| quot.coeff(Monomial::new(s, m - 1 - s))).collect())
}

/// Recovers the formula for layer `r - m` from exact layers at `sample_rs`
/// and checks it at `holdout_r`.
///
/// Each sample and the holdout must satisfy `r >= 2(m+1)`. The coefficients
/// are interpolated over all samples and must agree with the interpolant of
/// all samples but the last; otherwise more samples are needed.
pub fn infer_layer_formula(m: u32, sample_rs: &[u32], holdout_r: u32) -> Result<LayerFormula, LayerError> {
    if m == 0 {
        return Err(LayerError::ZeroLayer);
    }
    let min = 2 * (m + 1);
    if let Some(&r) = sample_rs.iter().chain([&holdout_r]).find(|&&r| r < min) {
        return Err(LayerError::SampleTooSmall { r, m, min });
    }
    if sample_rs.len() < 2 {
        return Err(LayerError::TooFewSamples(sample_rs.len()));
    }

    let base = P::generator_sum(AlgebraKind::Shift);
    let mut columns: Vec<Vec<(ExactRational, ExactRational)>> = vec![Vec::new(); m as usize];
    for &r in sample_rs {
        let coeffs = layer_quotient(&base.pow(r), r, m)?;
        for (s, c) in coeffs.into_iter().enumerate() {
            columns[s].push((ExactRational::from_integer(r.into()), c));
        }
    }

    let mut q_coeffs = Vec::with_capacity(m as usize);
    for (s, points) in columns.iter().enumerate() {
        let all = interpolate(Indeterminate::R, points)?;
        let fewer = interpolate(Indeterminate::R, &points[..points.len() - 1])?;
        if all != fewer {
            return Err(LayerError::Unstable { m, s });
        }
        q_coeffs.push(all);
    }

    let formula = LayerFormula { m, q_coeffs };
    let computed = base.pow(holdout_r).homogeneous_component(holdout_r - m);
    if formula.assemble(holdout_r)? != computed {
        return Err(LayerError::HoldoutMismatch { r: holdout_r, m });
    }
    Ok(formula)
}
