use num_complex::Complex64;

use super::euler_maclaurin::n_pow_neg;
use super::{check_finite, gamma, ZetaError};
use crate::summation::ComplexSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothedSum {
    /// `Σ_{n ≤ M} e^{-n/Y} n^{-s}` with `M = ⌊Y · multiplier⌋`.
    pub value: Complex64,
    pub terms: usize,
    /// Bound on the omitted tail `Σ_{n > M} e^{-n/Y} n^{-σ}`.
    pub tail_bound: f64,
}

/// The exponentially smoothed series `Σ e^{-n/Y} n^{-s}`, truncated at
/// `n ≤ Y · truncation_multiplier`.
///
/// Requires `Y ≥ 1` and `truncation_multiplier ≥ log²(max(|t|, 10))`.
pub fn smoothed_sum(
    s: Complex64,
    y: f64,
    truncation_multiplier: f64,
) -> Result<SmoothedSum, ZetaError> {
    check_finite(s)?;
    if !(y >= 1.0) || !y.is_finite() {
        return Err(ZetaError::Domain(format!(
            "Y = {y} must be a finite number >= 1"
        )));
    }
    let min_mult = s.im.abs().max(10.0).ln().powi(2);
    if !(truncation_multiplier >= min_mult) || !truncation_multiplier.is_finite() {
        return Err(ZetaError::Domain(format!(
            "truncation multiplier {truncation_multiplier} below log^2(max(|t|, 10)) = {min_mult}"
        )));
    }
    let m = (y * truncation_multiplier).floor();
    if m > 1e9 {
        return Err(ZetaError::Domain(format!(
            "{m} terms exceeds the supported length"
        )));
    }
    let terms = m as usize;
    let mut sum = ComplexSum::new();
    for n in 1..=terms {
        sum.add(n_pow_neg(n, s) * (-(n as f64) / y).exp());
    }
    Ok(SmoothedSum {
        value: sum.value(),
        terms,
        tail_bound: tail_bound(s.re, y, terms),
    })
}

/// Geometric bound on `Σ_{n>M} e^{-n/Y} n^{-σ}` from the largest ratio of consecutive terms.
fn tail_bound(sigma: f64, y: f64, m: usize) -> f64 {
    let first = m as f64 + 1.0;
    let lead = first.powf(-sigma) * (-first / y).exp();
    let growth = ((first + 1.0) / first).powf(-sigma).max(1.0);
    let q = (-1.0 / y).exp() * growth;
    if q < 1.0 {
        lead / (1.0 - q)
    } else {
        f64::INFINITY
    }
}

/// The residue `Γ(1-s) Y^{1-s}` separating the smoothed sum from ζ(s).
pub fn smoothing_pole_term(s: Complex64, y: f64) -> Result<Complex64, ZetaError> {
    check_finite(s)?;
    if !(y > 0.0) {
        return Err(ZetaError::Domain(format!("Y = {y} must be positive")));
    }
    let w = Complex64::new(1.0, 0.0) - s;
    Ok(gamma(w)? * (w * y.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_agreement() {
        let r = smoothed_sum(Complex64::new(2.0, 0.0), 1.0, 40.0).unwrap();
        let brute: f64 = (1..200)
            .map(|n| (-(n as f64)).exp() / (n as f64 * n as f64))
            .sum();
        assert!((r.value.re - brute).abs() < 1e-15);
        assert!((r.value.re - 0.408_754_287_348_896).abs() < 1e-14);
        assert!(r.tail_bound < 1e-18);
    }

    #[test]
    fn domain_checks() {
        let s = Complex64::new(0.75, 20.0);
        assert!(smoothed_sum(s, 0.5, 100.0).is_err());
        assert!(smoothed_sum(s, 10.0, 1.0).is_err());
        assert!(smoothing_pole_term(Complex64::new(2.0, 0.0), 10.0).is_err());
    }

    #[test]
    fn pole_term_at_real_point() {
        // Γ(1/2) Y^{1/2}
        let p = smoothing_pole_term(Complex64::new(0.5, 0.0), 4.0).unwrap();
        assert!((p.re - 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }
}
