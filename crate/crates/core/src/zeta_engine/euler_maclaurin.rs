use num_complex::Complex64;

use super::{
    bernoulli_even_over_factorial, check_finite, chi, EvalSettings, TermCount, ZetaError, MAX_ABS_T,
};
use crate::summation::ComplexSum;

/// Upper limit on direct terms when doubling `N` in automatic mode.
const MAX_AUTO_TERMS: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEvaluation {
    pub value: Complex64,
    /// Bound on the Euler–Maclaurin remainder.
    pub remainder_bound: f64,
    /// Number of directly summed terms `N`.
    pub terms: usize,
}

pub(crate) fn check_zeta_domain(s: Complex64) -> Result<(), ZetaError> {
    check_finite(s)?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(ZetaError::Pole { re: s.re, im: s.im });
    }
    if s.im.abs() > MAX_ABS_T {
        return Err(ZetaError::OutOfRange(s.im));
    }
    if s.re < -1.0 {
        return Err(ZetaError::Domain(format!(
            "sigma = {} is below the supported range (sigma >= -1)",
            s.re
        )));
    }
    Ok(())
}

/// ζ(s) by Euler–Maclaurin summation.
///
/// Supported for `σ ≥ -1`, `|t| ≤ 10^6`, `s ≠ 1`. The settings' target bounds
/// the truncation error. Rounding of the phases `t log n` adds roughly
/// `ε |t| log|t|` per term on top of that, which matters only for large `|t|`.
pub fn zeta(s: Complex64, settings: &EvalSettings) -> Result<Complex64, ZetaError> {
    zeta_with_bound(s, settings).map(|e| e.value)
}

/// ζ(s) together with the remainder bound and term count actually used.
///
/// For `σ < 0` the growing terms `n^{-σ}` would cancel badly, so the value is
/// taken as `χ(s) ζ(1-s)` and the bound scaled by `|χ(s)|`.
pub fn zeta_with_bound(s: Complex64, settings: &EvalSettings) -> Result<ZetaEvaluation, ZetaError> {
    settings.validate()?;
    check_zeta_domain(s)?;
    if s.re < 0.0 {
        let c = chi(s)?;
        let scale = c.norm();
        if scale == 0.0 {
            return Ok(ZetaEvaluation {
                value: c,
                remainder_bound: 0.0,
                terms: 0,
            });
        }
        let inner = EvalSettings {
            target_abs_error: settings.target_abs_error / scale,
            ..*settings
        };
        let e = euler_maclaurin(Complex64::new(1.0, 0.0) - s, &inner)?;
        return Ok(ZetaEvaluation {
            value: c * e.value,
            remainder_bound: scale * e.remainder_bound,
            terms: e.terms,
        });
    }
    euler_maclaurin(s, settings)
}

fn euler_maclaurin(s: Complex64, settings: &EvalSettings) -> Result<ZetaEvaluation, ZetaError> {
    let mut n = match settings.euler_maclaurin_terms {
        TermCount::Auto => EvalSettings::auto_terms(s.im),
        TermCount::Fixed(n) => n,
    };
    loop {
        let (tail, bound) = tail_terms(s, n, settings.bernoulli_order);
        if bound <= settings.target_abs_error {
            let mut sum = ComplexSum::default();
            for k in 1..n {
                sum.add(n_pow_neg(k, s));
            }
            sum.add(tail);
            return Ok(ZetaEvaluation {
                value: sum.value(),
                remainder_bound: bound,
                terms: n,
            });
        }
        let can_grow = settings.euler_maclaurin_terms == TermCount::Auto && n < MAX_AUTO_TERMS;
        if !can_grow || !bound.is_finite() {
            return Err(ZetaError::PrecisionUnachievable {
                bound,
                target: settings.target_abs_error,
                terms: n,
            });
        }
        n *= 2;
    }
}

/// `n^{-s}`.
#[inline]
pub(crate) fn n_pow_neg(n: usize, s: Complex64) -> Complex64 {
    let ln = (n as f64).ln();
    let mag = (-s.re * ln).exp();
    let (sin, cos) = (s.im * ln).sin_cos();
    Complex64::new(mag * cos, -mag * sin)
}

/// Everything in Euler–Maclaurin except `Σ_{n<N} n^{-s}`, plus the remainder bound:
/// `N^{1-s}/(s-1) + N^{-s}/2 + Σ_{k≤m} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}`.
pub(crate) fn tail_terms(s: Complex64, n: usize, order: usize) -> (Complex64, f64) {
    let coeffs = bernoulli_even_over_factorial(order);
    let nf = n as f64;
    let n_s = n_pow_neg(n, s);
    let inv_n2 = 1.0 / (nf * nf);
    let one = Complex64::new(1.0, 0.0);
    let mut sum = ComplexSum::default();
    sum.add(n_s * nf / (s - one));
    sum.add(n_s * 0.5);
    // (s)_{2k-1} N^{-s-2k+1}, starting from k = 1: s N^{-s-1}.
    let mut factor = s * n_s / nf;
    for (k, c) in coeffs.iter().take(order).enumerate() {
        sum.add(factor * *c);
        let a = 2.0 * (k as f64) + 1.0;
        factor = factor * (s + a) * (s + a + 1.0) * inv_n2;
    }
    let next = (factor * coeffs[order]).norm();
    let a = 2.0 * order as f64 + 1.0;
    let bound = next * (s + a).norm() / (s.re + a);
    (sum.value(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn known_real_values() {
        let st = EvalSettings::default();
        let z2 = zeta(c(2.0, 0.0), &st).unwrap();
        assert!((z2.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
        assert!(z2.im.abs() < 1e-15);
        let z0 = zeta(c(0.0, 0.0), &st).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-14);
        let zm1 = zeta(c(-1.0, 0.0), &st).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-15, "{zm1}");
        let zh = zeta(c(0.5, 0.0), &st).unwrap();
        assert!((zh.re + 1.460_354_508_809_586_8).abs() < 1e-13);
    }

    #[test]
    fn first_zero() {
        let z = zeta(c(0.5, 14.134_725_141_734_693), &EvalSettings::default()).unwrap();
        assert!(z.norm() < 1e-12, "{z}");
    }

    #[test]
    fn pole_and_range() {
        let st = EvalSettings::default();
        assert!(matches!(
            zeta(c(1.0, 0.0), &st),
            Err(ZetaError::Pole { .. })
        ));
        assert!(matches!(
            zeta(c(0.5, 2e6), &st),
            Err(ZetaError::OutOfRange(_))
        ));
        assert!(matches!(zeta(c(-2.0, 0.0), &st), Err(ZetaError::Domain(_))));
        assert!(zeta(c(f64::NAN, 0.0), &st).is_err());
    }

    #[test]
    fn fixed_terms_report_unreachable_target() {
        let st = EvalSettings {
            euler_maclaurin_terms: TermCount::Fixed(2),
            bernoulli_order: 1,
            target_abs_error: 1e-15,
        };
        assert!(matches!(
            zeta(c(0.5, 100.0), &st),
            Err(ZetaError::PrecisionUnachievable { .. })
        ));
    }

    #[test]
    fn settings_changes_agree() {
        let s = c(0.7, 321.5);
        let a = zeta(s, &EvalSettings::default()).unwrap();
        let b = zeta(
            s,
            &EvalSettings {
                euler_maclaurin_terms: TermCount::Fixed(1500),
                bernoulli_order: 20,
                target_abs_error: 1e-12,
            },
        )
        .unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm().max(1.0));
    }
}
