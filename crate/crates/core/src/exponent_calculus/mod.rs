//! Exact-rational exponent-pair calculus.
//!
//! Everything here is computed with arbitrary-precision rationals; no value is
//! ever rounded. Pairs valid only as `(k+ε, ℓ+ε)` are stored at their limiting
//! rational values with [`ExponentPair::carries_epsilon`] set.

mod objective;
mod optimize;
mod pair;
mod pairset;
mod thresholds;

pub use objective::{
    parse_constraint, parse_objective, Comparison, FractionalObjective, LinearConstraint,
    LinearForm, OBJECTIVE_GRAMMAR,
};
pub use optimize::{optimize, Objective, Optimum, TheoremObjective};
pub use pair::ExponentPair;
pub use pairset::{enumerate_pairs, named_seed, PairEntry, PairRecord, PairSet, SEED_NAMES};
pub use thresholds::{
    consistency_check_mu_equals_pair, mu_threshold, q_family_pair, q_family_set,
    theorem1_pair_sigma, theorem1_sigma, theorem1_threshold, theorem2_alternate_sigma,
    theorem2_sigma, theorem2_threshold, y_cutoff_exponent, MuThreshold, Relation, Threshold,
};

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalcError {
    #[error("invalid exponent pair ({k}, {l}): need 0 <= k <= 1/2 <= l <= 1")]
    InvalidPair { k: String, l: String },
    #[error("invalid process word {0:?}: letters must be A or B")]
    InvalidWord(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("nonlinear term at position {position}: {message}")]
    Nonlinear { position: usize, message: String },
    #[error("objective denominator vanishes at ({k}, {l})")]
    DivisionByZero { k: String, l: String },
    #[error("hypothesis {hypothesis} violated by ({k}, {l})")]
    HypothesisViolation {
        hypothesis: &'static str,
        k: String,
        l: String,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no pair satisfies the constraint and objective domain")]
    EmptyFeasibleSet,
    #[error("unknown seed {0:?}")]
    UnknownSeed(String),
    #[error("value {0} does not fit the 64-bit serialization format")]
    Overflow(String),
    #[error("serialization: {0}")]
    Serialization(String),
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parse `"3/8"`, `"-5"` or an exact decimal such as `"0.375"`.
pub fn parse_rational(text: &str) -> Result<Rational, CalcError> {
    let bad = |msg: &str| CalcError::Parse {
        position: 0,
        message: format!("{msg}: {text:?}"),
    };
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(text).ok_or_else(|| bad("not a rational"))
}

pub(crate) fn parse_decimal(text: &str) -> Option<Rational> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Some(if neg { -value } else { value })
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn is_valid_point(k: &Rational, l: &Rational) -> bool {
    let h = half();
    *k >= Rational::zero() && *k <= h && h <= *l && *l <= Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = rat(16, 928);
        assert_eq!(r, rat(1, 58));
        assert_eq!(*r.denom(), BigInt::from(58));
        let neg = rat(3, -6);
        assert_eq!(*neg.numer(), BigInt::from(-1));
        assert_eq!(*neg.denom(), BigInt::from(2));
    }

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("589/666").unwrap(), rat(589, 666));
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert_eq!(parse_rational("0.375").unwrap(), rat(3, 8));
        assert_eq!(parse_rational(" 269/410 ").unwrap(), rat(269, 410));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }
}
