//! σ-threshold formulas for the hybrid fourth-moment bounds.

use num_traits::{One, Zero};

use super::{half, int, rat, CalcError, ExponentPair, PairEntry, PairSet, Rational};
use crate::format;

fn violation(hypothesis: &'static str, p: &ExponentPair) -> CalcError {
    CalcError::HypothesisViolation {
        hypothesis,
        k: format::rational(p.k()),
        l: format::rational(p.l()),
    }
}

fn max(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// `(5k + ℓ)/(4k + 1)`; the denominator is positive for every valid pair.
fn five_k_plus_l_ratio(k: &Rational, l: &Rational) -> Rational {
    (k * int(5) + l) / (k * int(4) + int(1))
}

/// `max(ℓ − k, (5k + ℓ)/(4k + 1))` without the `k + ℓ < 1` check.
pub(crate) fn theorem1_pair_value(p: &ExponentPair) -> Rational {
    max(p.l() - p.k(), five_k_plus_l_ratio(p.k(), p.l()))
}

/// Pair-dependent threshold `max(ℓ − k, (5k + ℓ)/(4k + 1))` for the
/// `|ζ(1/2+it)|⁴|ζ(σ+it)|²` bound. Requires `k + ℓ < 1`.
pub fn theorem1_pair_sigma(p: &ExponentPair) -> Result<Rational, CalcError> {
    if p.k() + p.l() >= Rational::one() {
        return Err(violation("k + l < 1", p));
    }
    let value = theorem1_pair_value(p);
    debug_assert!(value < Rational::one());
    Ok(value)
}

/// `min(5/6, theorem1_pair_sigma(p))`.
pub fn theorem1_sigma(p: &ExponentPair) -> Result<Rational, CalcError> {
    let pair_value = theorem1_pair_sigma(p)?;
    let five_sixths = rat(5, 6);
    Ok(if pair_value < five_sixths {
        pair_value
    } else {
        five_sixths
    })
}

/// `max((ℓ − k + 1)/2, (11k + ℓ + 1)/(8k + 2))` for the
/// `|ζ(1/2+it)|⁴|ζ(σ+it)|⁴` bound. Requires `3k + ℓ < 1`.
pub fn theorem2_sigma(p: &ExponentPair) -> Result<Rational, CalcError> {
    let (k, l) = p.point();
    if k * int(3) + l >= Rational::one() {
        return Err(violation("3k + l < 1", p));
    }
    let half_branch = (l - k + int(1)) / int(2);
    let main_branch = (k * int(11) + l + int(1)) / (k * int(8) + int(2));
    debug_assert_eq!(theorem2_alternate_sigma(p)?, main_branch);
    Ok(max(half_branch, main_branch))
}

/// The other form of the second threshold,
/// `max((11k + ℓ + 1)/(8k + 2), (11k + ℓ)/(8k + 1))`.
///
/// Under `3k + ℓ < 1` the first branch always wins, because
/// `(11k+ℓ+1)(8k+1) − (11k+ℓ)(8k+2) = 1 − 3k − ℓ`.
pub fn theorem2_alternate_sigma(p: &ExponentPair) -> Result<Rational, CalcError> {
    let (k, l) = p.point();
    if k * int(3) + l >= Rational::one() {
        return Err(violation("3k + l < 1", p));
    }
    let first = (k * int(11) + l + int(1)) / (k * int(8) + int(2));
    let second = (k * int(11) + l) / (k * int(8) + int(1));
    Ok(max(first, second))
}

/// Whether a reported threshold is `σ > value` or `σ ≥ value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Greater,
    AtLeast,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub theorem: u8,
    /// Pair-dependent part of the threshold.
    pub pair_value: Rational,
    /// Final threshold on σ.
    pub sigma: Rational,
    pub relation: Relation,
}

/// Theorem-1 threshold with its relation. The unconditional `5/6` branch
/// holds as `σ ≥ 5/6`; the pair branch is strict.
pub fn theorem1_threshold(p: &ExponentPair) -> Result<Threshold, CalcError> {
    let pair_value = theorem1_pair_sigma(p)?;
    let sigma = theorem1_sigma(p)?;
    let relation = if sigma < pair_value {
        Relation::AtLeast
    } else {
        Relation::Greater
    };
    Ok(Threshold {
        theorem: 1,
        pair_value,
        sigma,
        relation,
    })
}

pub fn theorem2_threshold(p: &ExponentPair) -> Result<Threshold, CalcError> {
    let sigma = theorem2_sigma(p)?;
    Ok(Threshold {
        theorem: 2,
        pair_value: sigma.clone(),
        sigma,
        relation: Relation::Greater,
    })
}

/// `(16/(120Q − 32), (120Q − 16q − 63)/(120Q − 32))` with `Q = 2^q`, `q ≥ 2`.
pub fn q_family_pair(q: u32) -> Result<ExponentPair, CalcError> {
    if q < 2 {
        return Err(CalcError::Domain(format!("q must be >= 2, got {q}")));
    }
    if q > 60 {
        return Err(CalcError::Domain(format!("q = {q} is too large")));
    }
    let big_q = Rational::from_integer(num_bigint::BigInt::from(1u64 << q));
    let denom = &big_q * int(120) - int(32);
    let k = int(16) / &denom;
    let l = (&big_q * int(120) - int(16 * q as i64) - int(63)) / denom;
    ExponentPair::new(k, l)
}

/// The family members for `q` in `range`, labelled `q=<q>`.
pub fn q_family_set(range: std::ops::RangeInclusive<u32>) -> Result<PairSet, CalcError> {
    let entries = range
        .map(|q| {
            Ok(PairEntry {
                pair: q_family_pair(q)?,
                seed: format!("q={q}"),
            })
        })
        .collect::<Result<Vec<_>, CalcError>>()?;
    Ok(PairSet::from_entries(entries))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuThreshold {
    pub value: Rational,
    /// `value <= 1`, equivalently `μ <= 1/(4j)`.
    pub feasible: bool,
}

/// `(1/2 + 6jμ)/(1 + 4jμ)`, the σ₀ obtainable from a bound `μ(1/2) <= mu`.
pub fn mu_threshold(j: u32, mu: &Rational) -> Result<MuThreshold, CalcError> {
    if j < 1 {
        return Err(CalcError::Domain("j must be >= 1".into()));
    }
    if *mu < Rational::zero() {
        return Err(CalcError::Domain("mu must be >= 0".into()));
    }
    let j = int(j as i64);
    let value = (half() + &j * int(6) * mu) / (int(1) + &j * int(4) * mu);
    let feasible = value <= Rational::one();
    Ok(MuThreshold { value, feasible })
}

/// Exponent of the cutoff `Y = T^{1/(6 − 4σ)}`, for `1/2 <= σ <= 1`.
pub fn y_cutoff_exponent(sigma: &Rational) -> Result<Rational, CalcError> {
    if *sigma < half() || *sigma > Rational::one() {
        return Err(CalcError::Domain(format!(
            "sigma = {} outside [1/2, 1]",
            format::rational(sigma)
        )));
    }
    Ok(Rational::one() / (int(6) - sigma * int(4)))
}

/// For `ℓ = k + 1/2`, the pair threshold equals the μ-threshold with `j = 1`.
///
/// Uses the pair formula directly so the check also covers `k >= 1/4`, where
/// `k + ℓ < 1` fails.
pub fn consistency_check_mu_equals_pair(k: &Rational) -> Result<bool, CalcError> {
    let pair = ExponentPair::new(k.clone(), k + half())?;
    Ok(theorem1_pair_value(&pair) == mu_threshold(1, k)?.value)
}
