//! Pure-phase and divisor-weighted Dirichlet sums: direct evaluation, the
//! hyperbola decomposition, Abel summation over dyadic windows, and
//! comparison against exponent-pair magnitudes.
//!
//! Phases follow the convention `n^{it} = e^{it log n}`.

mod bounds;
mod divisor;
mod hyperbola;
mod window;

pub use bounds::{
    dyadic_floor, s1_s2_bound_check, scan_rows, vdc_bound, vdc_magnitude, write_scan_csv,
    BoundRatios, SumScanRow, SUM_SCAN_HEADER,
};
pub use divisor::{divisor_phase_sum_direct, divisor_sieve, DivisorTable, MAX_TABLE_SIZE};
pub use hyperbola::{divisor_phase_sum_hyperbola, HyperbolaSums};
pub use window::{partial_summation_window, phase_sum, SumWindow, Weight};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SumError {
    #[error("invalid window: need 1 <= N < N' <= 2N, got N = {n}, N' = {n_prime}")]
    InvalidWindow { n: u64, n_prime: u64 },
    #[error("divisor table holds n <= {available}, need n <= {needed}")]
    TableTooSmall { needed: u64, available: u64 },
    #[error("divisor table of size {requested} exceeds the limit {limit}")]
    Resource { requested: u64, limit: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("direct and partial-summation values disagree: {direct} vs {abel}")]
    Inconsistent { direct: Complex64, abel: Complex64 },
}

/// `n^{it}`.
#[inline]
pub(crate) fn phase(n: u64, t: f64) -> Complex64 {
    let (sin, cos) = (t * (n as f64).ln()).sin_cos();
    Complex64::new(cos, sin)
}
