//! Evaluation of ζ(s), χ(s) and the finite-sum representations of ζ and ζ²
//! near the critical strip, each with a measurable residual.
//!
//! The working format is `f64` (about 16 significant digits). ζ is computed by
//! Euler–Maclaurin summation with an explicit remainder bound; χ goes through
//! complex log-Γ so it never overflows at large `|t|`.

mod afe;
mod bernoulli;
mod chi;
mod euler_maclaurin;
mod gamma;
mod line;
mod scan;
mod smoothing;

pub use afe::{afe_simple, afe_zeta_squared, functional_equation_residual, Afe2Result, AfeResult};
pub use bernoulli::{bernoulli, bernoulli_even_over_factorial};
pub use chi::chi;
pub use euler_maclaurin::{zeta, zeta_with_bound, ZetaEvaluation};
pub use gamma::{gamma, ln_gamma};
pub use line::{DirichletPoly, LineEvaluator};
pub use scan::{fe_grid, write_scan_csv, FeGrid, ScanRow, SCAN_HEADER};
pub use smoothing::{smoothed_sum, smoothing_pole_term, SmoothedSum};

pub use num_complex::Complex64 as ComplexValue;
use thiserror::Error;

/// Largest `|t|` accepted by [`zeta`].
pub const MAX_ABS_T: f64 = 1.0e6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },
    #[error("|t| = {0} exceeds the supported range")]
    OutOfRange(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot reach target error {target:e}: remainder bound {bound:e} with {terms} terms")]
    PrecisionUnachievable {
        bound: f64,
        target: f64,
        terms: usize,
    },
    #[error("divisor table holds n <= {available}, need n <= {needed}")]
    TableTooSmall { needed: usize, available: usize },
    #[error("invalid settings: {0}")]
    InvalidSettings(String),
}

/// Number of directly summed terms in Euler–Maclaurin summation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermCount {
    /// `N = max(50, ⌈2|t|⌉)`, doubled until the remainder bound meets the target.
    #[default]
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalSettings {
    pub euler_maclaurin_terms: TermCount,
    /// Number of Bernoulli correction terms.
    pub bernoulli_order: usize,
    /// Target bound on the Euler–Maclaurin truncation error.
    pub target_abs_error: f64,
}

impl Default for EvalSettings {
    fn default() -> Self {
        EvalSettings {
            euler_maclaurin_terms: TermCount::Auto,
            bernoulli_order: 12,
            target_abs_error: 1e-12,
        }
    }
}

impl EvalSettings {
    pub const MAX_BERNOULLI_ORDER: usize = 60;

    pub fn validate(&self) -> Result<(), ZetaError> {
        if self.bernoulli_order < 1 || self.bernoulli_order > Self::MAX_BERNOULLI_ORDER {
            return Err(ZetaError::InvalidSettings(format!(
                "bernoulli_order must be in 1..={}",
                Self::MAX_BERNOULLI_ORDER
            )));
        }
        if !(self.target_abs_error > 0.0) {
            return Err(ZetaError::InvalidSettings(
                "target_abs_error must be positive".into(),
            ));
        }
        if self.euler_maclaurin_terms == TermCount::Fixed(0) {
            return Err(ZetaError::InvalidSettings(
                "euler_maclaurin_terms must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The automatic direct-term count for height `t`.
    pub fn auto_terms(t: f64) -> usize {
        50usize.max((2.0 * t.abs()).ceil() as usize)
    }
}

pub(crate) fn check_finite(s: ComplexValue) -> Result<(), ZetaError> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!("non-finite argument {s}")))
    }
}
