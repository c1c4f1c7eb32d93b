use num_complex::Complex64;

use super::integrand::MomentIntegrand;
use super::{MomentError, MAX_HARNESS_T};
use crate::exec::Execution;
use crate::quadrature::{integrate, PanelScheme, Primitive};
use crate::zeta_engine::{DirichletPoly, EvalSettings, LineEvaluator};

/// The two integrals bounding the hybrid moment with `j = 1`:
///
/// `I₁ = ∫_0^T |ζ(1/2+it)|⁴ |Σ_{n ≤ Y log²T} e^{-n/Y} n^{-σ-it}|² dt`,
/// `I₂ = Y^{1-2σ} ∫_0^T |ζ(1/2+it)|⁴ (∫_{-log²T}^{log²T} |ζ(1/2+it+iv)| dv)² dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitResult {
    pub i1: f64,
    pub i1_error: f64,
    pub i2: f64,
    pub i2_error: f64,
    /// `Y^{1-2σ}`.
    pub prefactor: f64,
    /// `log² T`, the half-length of the inner integral.
    pub inner_half_width: f64,
    /// Terms in the smoothed sum, `⌊Y log² T⌋`.
    pub smoothed_terms: usize,
}

pub fn split_i1_i2(
    big_t: f64,
    sigma: f64,
    y: f64,
    scheme: &PanelScheme,
    settings: &EvalSettings,
    exec: Execution,
) -> Result<SplitResult, MomentError> {
    if !(sigma > 0.5 && sigma < 1.0) {
        return Err(MomentError::Domain(format!(
            "sigma = {sigma} outside (1/2, 1)"
        )));
    }
    if !(y >= 1.0 && y.is_finite()) {
        return Err(MomentError::Domain(format!(
            "Y = {y} must be a finite number >= 1"
        )));
    }
    if !(big_t > 1.0) {
        return Err(MomentError::Domain(format!("T = {big_t} must exceed 1")));
    }
    if big_t > MAX_HARNESS_T {
        return Err(MomentError::Resource(format!(
            "T = {big_t} exceeds {MAX_HARNESS_T}"
        )));
    }
    scheme.validate().map_err(MomentError::Domain)?;
    let l = big_t.ln().powi(2);
    let terms = (y * l).floor() as usize;
    let coeffs: Vec<Complex64> = (1..=terms)
        .map(|n| {
            let n = n as f64;
            Complex64::new((-n / y).exp() * n.powf(-sigma), 0.0)
        })
        .collect();

    let smoothed =
        MomentIntegrand::new(0.5, 0, big_t, settings)?.with_poly(DirichletPoly::new(coeffs));
    let i1 = integrate(|t| smoothed.eval(t), 0.0, big_t, scheme, exec)?;

    let line = LineEvaluator::new(&[0.5], big_t + l, *settings)?;
    let abs_zeta = |u: f64| -> Result<f64, MomentError> { Ok(line.zeta_values(u)?[0].norm()) };
    let primitive = Primitive::build(abs_zeta, 0.0, big_t + l, scheme, exec)?;
    // |ζ(1/2 - iu)| = |ζ(1/2 + iu)|, so the primitive from 0 is odd.
    let odd = |x: f64| {
        if x < 0.0 {
            -primitive.eval(-x)
        } else {
            primitive.eval(x)
        }
    };
    let prefactor = y.powf(1.0 - 2.0 * sigma);
    let fourth = MomentIntegrand::new(0.5, 0, big_t, settings)?;
    let i2 = integrate(
        |t| {
            let inner = odd(t + l) - odd(t - l);
            Ok(fourth.eval(t)? * inner * inner)
        },
        0.0,
        big_t,
        scheme,
        exec,
    )?;
    // The inner integral carries at most twice the primitive's error; its
    // effect on I₂ is bounded through ∫|ζ|⁴ · 2·inner·δ.
    let inner_error = 2.0 * primitive.error_estimate();
    let fourth_moment = integrate(|t| fourth.eval(t), 0.0, big_t, scheme, exec)?;
    let inner_max = 2.0 * primitive.eval(big_t + l);
    let i2_error =
        prefactor * (i2.error_estimate + fourth_moment.value * 2.0 * inner_max * inner_error);
    Ok(SplitResult {
        i1: i1.value,
        i1_error: i1.error_estimate,
        i2: prefactor * i2.value,
        i2_error,
        prefactor,
        inner_half_width: l,
        smoothed_terms: terms,
    })
}
