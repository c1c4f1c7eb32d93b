use num_complex::Complex64;

use super::integrand::MomentIntegrand;
use super::{MomentError, MAX_HARNESS_T};
use crate::exec::Execution;
use crate::quadrature::{integrate, PanelScheme};
use crate::zeta_engine::{DirichletPoly, EvalSettings};

/// ε in the right-hand side `T^{1+ε} M (1 + M² T^{-1/2}) max|a_m|²`; an arbitrary fixed choice.
pub const WATT_EPSILON: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WattResult {
    /// `∫_0^T |Σ_{m≤M} a_m m^{it}|² |ζ(1/2+it)|⁴ dt`.
    pub lhs: f64,
    pub lhs_error: f64,
    pub rhs: f64,
    /// `lhs / rhs`, or 0 when every coefficient vanishes.
    pub ratio: f64,
}

/// Weighted fourth moment against its mean-value bound shape.
pub fn watt_ratio(
    big_t: f64,
    coeffs: &[Complex64],
    scheme: &PanelScheme,
    settings: &EvalSettings,
    exec: Execution,
) -> Result<WattResult, MomentError> {
    check_t(big_t)?;
    if coeffs.is_empty() {
        return Err(MomentError::Domain(
            "at least one coefficient is required".into(),
        ));
    }
    if coeffs
        .iter()
        .any(|a| !(a.re.is_finite() && a.im.is_finite()))
    {
        return Err(MomentError::Domain("coefficients must be finite".into()));
    }
    let m = coeffs.len() as f64;
    let max_sq = coeffs.iter().map(|a| a.norm_sqr()).fold(0.0, f64::max);
    let rhs = big_t.powf(1.0 + WATT_EPSILON) * m * (1.0 + m * m / big_t.sqrt()) * max_sq;
    if max_sq == 0.0 || big_t == 0.0 {
        return Ok(WattResult {
            lhs: 0.0,
            lhs_error: 0.0,
            rhs,
            ratio: 0.0,
        });
    }
    // |Σ a_m m^{it}| = |Σ conj(a_m) m^{-it}|
    let poly = DirichletPoly::new(coeffs.iter().map(|a| a.conj()).collect());
    let integrand = MomentIntegrand::new(0.5, 0, big_t, settings)?.with_poly(poly);
    let r = integrate(|t| integrand.eval(t), 0.0, big_t, scheme, exec)?;
    Ok(WattResult {
        lhs: r.value,
        lhs_error: r.error_estimate,
        rhs,
        ratio: r.value / rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeResult {
    /// `∫_0^T |ζ(1/2+it)|⁶ dt`.
    pub value: f64,
    pub error_estimate: f64,
    /// `value / T^{5/4}`, 0 at `T = 0`.
    pub probe: f64,
}

pub fn sixth_moment_probe(
    big_t: f64,
    scheme: &PanelScheme,
    settings: &EvalSettings,
    exec: Execution,
) -> Result<ProbeResult, MomentError> {
    check_t(big_t)?;
    if big_t == 0.0 {
        return Ok(ProbeResult {
            value: 0.0,
            error_estimate: 0.0,
            probe: 0.0,
        });
    }
    let integrand = MomentIntegrand::new(0.5, 1, big_t, settings)?;
    let r = integrate(|t| integrand.eval(t), 0.0, big_t, scheme, exec)?;
    Ok(ProbeResult {
        value: r.value,
        error_estimate: r.error_estimate,
        probe: r.value / big_t.powf(1.25),
    })
}

fn check_t(big_t: f64) -> Result<(), MomentError> {
    if !(big_t >= 0.0 && big_t.is_finite()) {
        return Err(MomentError::Domain(format!(
            "T = {big_t} must be a finite number >= 0"
        )));
    }
    if big_t > MAX_HARNESS_T {
        return Err(MomentError::Resource(format!(
            "T = {big_t} exceeds {MAX_HARNESS_T}"
        )));
    }
    Ok(())
}
