//! Desk-scale moment integrals of ζ on and near the critical line:
//! `∫ |ζ(1/2+it)|⁴ |ζ(σ+it)|^{2j} dt`, the split of the hybrid moment into a
//! smoothed-sum part and a short-interval part, a weighted fourth-moment
//! ratio harness, and log-log growth fits.
//!
//! Nothing here checks an asymptotic statement; the outputs are measurements.

mod growth;
mod integrand;
mod split;
mod watt;

pub use growth::{dyadic_scan, fit_growth, GrowthFit, GrowthSample};
pub use split::{split_i1_i2, SplitResult};
pub use watt::{sixth_moment_probe, watt_ratio, ProbeResult, WattResult, WATT_EPSILON};

use std::io::Write;

use thiserror::Error;

use crate::exec::Execution;
use crate::format::float;
use crate::quadrature::{integrate, PanelScheme, QuadError};
use crate::zeta_engine::{EvalSettings, ZetaError};
use integrand::MomentIntegrand;

/// Largest `t_max` accepted by [`integrate_moment`].
pub const MAX_MOMENT_T: f64 = 1.0e4;
/// Largest `T` for the split, weighted and sixth-moment harnesses.
pub const MAX_HARNESS_T: f64 = 2000.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MomentError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("quadrature refinement stalled on [{a}, {b}]")]
    Stalled { a: f64, b: f64 },
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

impl From<QuadError<MomentError>> for MomentError {
    fn from(e: QuadError<MomentError>) -> Self {
        match e {
            QuadError::Stalled { a, b } => MomentError::Stalled { a, b },
            QuadError::Settings(m) => MomentError::Domain(m),
            QuadError::Integrand(e) => e,
        }
    }
}

/// `∫_{t_min}^{t_max} |ζ(1/2+it)|⁴ |ζ(σ+it)|^{2j} dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSpec {
    pub sigma: f64,
    pub j: u32,
    pub t_min: f64,
    pub t_max: f64,
    pub scheme: PanelScheme,
}

impl MomentSpec {
    pub fn new(sigma: f64, j: u32, t_min: f64, t_max: f64) -> Self {
        MomentSpec {
            sigma,
            j,
            t_min,
            t_max,
            scheme: PanelScheme::default(),
        }
    }

    pub fn with_scheme(mut self, scheme: PanelScheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn validate(&self) -> Result<(), MomentError> {
        if !(0.5..=1.0).contains(&self.sigma) {
            return Err(MomentError::Domain(format!(
                "sigma = {} outside [1/2, 1]",
                self.sigma
            )));
        }
        if self.j > 2 {
            return Err(MomentError::Domain(format!(
                "j = {} outside {{0, 1, 2}}",
                self.j
            )));
        }
        if !(self.t_min >= 0.0 && self.t_min <= self.t_max && self.t_max.is_finite()) {
            return Err(MomentError::Domain(format!(
                "need 0 <= t_min <= t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        if self.t_max > MAX_MOMENT_T {
            return Err(MomentError::Resource(format!(
                "t_max = {} exceeds {MAX_MOMENT_T}",
                self.t_max
            )));
        }
        if self.sigma == 1.0 && self.j > 0 && self.t_min == 0.0 {
            return Err(MomentError::Domain(
                "sigma = 1 with j > 0 is not integrable at t = 0 (pole of zeta at 1)".into(),
            ));
        }
        self.scheme.validate().map_err(MomentError::Domain)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panel_count: usize,
    pub spec: MomentSpec,
}

pub fn integrate_moment(
    spec: &MomentSpec,
    settings: &EvalSettings,
    exec: Execution,
) -> Result<MomentResult, MomentError> {
    spec.validate()?;
    if spec.t_min == spec.t_max {
        return Ok(MomentResult {
            value: 0.0,
            error_estimate: 0.0,
            panel_count: 0,
            spec: *spec,
        });
    }
    let integrand = MomentIntegrand::new(spec.sigma, spec.j, spec.t_max, settings)?;
    let r = integrate(
        |t| integrand.eval(t),
        spec.t_min,
        spec.t_max,
        &spec.scheme,
        exec,
    )?;
    Ok(MomentResult {
        value: r.value,
        error_estimate: r.error_estimate,
        panel_count: r.panels,
        spec: *spec,
    })
}

pub const RESULTS_HEADER: &str = "sigma,j,T,value,error_estimate,panels";

/// Results CSV; `T` is each spec's `t_max`.
pub fn write_results_csv<W: Write>(mut out: W, results: &[MomentResult]) -> std::io::Result<()> {
    writeln!(out, "{RESULTS_HEADER}")?;
    for r in results {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            float(r.spec.sigma),
            r.spec.j,
            float(r.spec.t_max),
            float(r.value),
            float(r.error_estimate),
            r.panel_count
        )?;
    }
    Ok(())
}
