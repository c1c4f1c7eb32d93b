use num_complex::Complex64;

use super::euler_maclaurin::n_pow_neg;
use super::{check_finite, chi, zeta, EvalSettings, ZetaError};
use crate::dirichlet_sums::DivisorTable;
use crate::summation::ComplexSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeResult {
    /// `Σ_{n ≤ cutoff} n^{-s}`.
    pub value: Complex64,
    /// `|value - ζ(s)|`.
    pub residual: f64,
    pub terms: usize,
}

/// The truncated Dirichlet series `Σ_{n ≤ x} n^{-s}` and its distance from ζ(s).
///
/// For `x ≥ t/2π` the residual is `x^{1-s}/(s-1) + O(x^{-σ})`.
pub fn afe_simple(
    s: Complex64,
    cutoff: f64,
    settings: &EvalSettings,
) -> Result<AfeResult, ZetaError> {
    check_finite(s)?;
    if !(0.5..=2.0).contains(&s.re) {
        return Err(ZetaError::Domain(format!(
            "sigma = {} outside [1/2, 2]",
            s.re
        )));
    }
    if !(cutoff >= 0.0) || !cutoff.is_finite() {
        return Err(ZetaError::Domain(format!(
            "cutoff = {cutoff} must be a finite number >= 0"
        )));
    }
    let terms = cutoff.floor() as usize;
    let value: ComplexSum = (1..=terms).map(|n| n_pow_neg(n, s)).collect();
    let value = value.value();
    let z = zeta(s, settings)?;
    Ok(AfeResult {
        value,
        residual: (value - z).norm(),
        terms,
    })
}

/// `|ζ(s) - χ(s) ζ(1-s)|`.
pub fn functional_equation_residual(
    s: Complex64,
    settings: &EvalSettings,
) -> Result<f64, ZetaError> {
    check_finite(s)?;
    let one = Complex64::new(1.0, 0.0);
    if s == one || s == Complex64::new(0.0, 0.0) {
        return Err(ZetaError::Pole { re: s.re, im: s.im });
    }
    let lhs = zeta(s, settings)?;
    let rhs = chi(s)? * zeta(one - s, settings)?;
    Ok((lhs - rhs).norm())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Afe2Result {
    /// `Σ_{n≤x} d(n) n^{-s} + χ²(s) Σ_{n≤y} d(n) n^{s-1}`.
    pub value: Complex64,
    /// `|value - ζ²(s)|`.
    pub residual: f64,
    /// `x^{1/2-σ} log t`.
    pub bound: f64,
    /// `residual / bound`.
    pub ratio: f64,
    /// The dual length `y = t²/(4π² x)`.
    pub y: f64,
}

/// Approximate functional equation for ζ²(s) with `xy = (t/2π)²`.
///
/// Requires `0 < σ < 1`, `t ≥ 10`, `t/2π ≤ x ≤ t²`, and a divisor table
/// reaching `max(x, y)`.
pub fn afe_zeta_squared(
    s: Complex64,
    x: f64,
    table: &DivisorTable,
    settings: &EvalSettings,
) -> Result<Afe2Result, ZetaError> {
    check_finite(s)?;
    let (sigma, t) = (s.re, s.im);
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(ZetaError::Domain(format!("sigma = {sigma} outside (0, 1)")));
    }
    if !(t >= 10.0) {
        return Err(ZetaError::Domain(format!("t = {t} below 10")));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    if !(x >= t / two_pi && x <= t * t) {
        return Err(ZetaError::Domain(format!("x = {x} outside [t/2pi, t^2]")));
    }
    let y = t * t / (two_pi * two_pi * x);
    let nx = x.floor() as usize;
    let ny = y.floor() as usize;
    let needed = nx.max(ny);
    if needed > table.max_n() {
        return Err(ZetaError::TableTooSmall {
            needed,
            available: table.max_n(),
        });
    }
    let mut first = ComplexSum::new();
    for n in 1..=nx {
        first.add(n_pow_neg(n, s) * table.d(n) as f64);
    }
    let dual = Complex64::new(1.0 - sigma, -t);
    let mut second = ComplexSum::new();
    for n in 1..=ny {
        second.add(n_pow_neg(n, dual) * table.d(n) as f64);
    }
    let c = chi(s)?;
    let value = first.value() + c * c * second.value();
    let z = zeta(s, settings)?;
    let residual = (value - z * z).norm();
    let bound = x.powf(0.5 - sigma) * t.ln();
    Ok(Afe2Result {
        value,
        residual,
        bound,
        ratio: residual / bound,
        y,
    })
}
