use num_complex::Complex64;

use super::{check_finite, gamma::ln_gamma, ZetaError};

/// χ(s) with ζ(s) = χ(s) ζ(1-s), computed as
/// `π^{s-1/2} Γ((1-s)/2) / Γ(s/2)` in logarithmic form.
///
/// `s = 1, 3, 5, …` are poles; at `s = 0, -2, -4, …` the value is 0.
pub fn chi(s: Complex64) -> Result<Complex64, ZetaError> {
    check_finite(s)?;
    if s.im == 0.0 && s.re.fract() == 0.0 {
        let n = s.re;
        if n >= 1.0 && (n as i64) % 2 == 1 {
            return Err(ZetaError::Pole { re: s.re, im: s.im });
        }
        if n <= 0.0 && (n as i64) % 2 == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let log =
        (s - 0.5) * std::f64::consts::PI.ln() + ln_gamma((one - s) * 0.5)? - ln_gamma(s * 0.5)?;
    Ok(log.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unit_modulus_on_critical_line() {
        for t in [0.1, 14.0, 1000.0, 123456.0] {
            assert!((chi(c(0.5, t)).unwrap().norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn real_values() {
        // χ(2) = ζ(2)/ζ(-1) = -2π²
        let x = chi(c(2.0, 0.0)).unwrap();
        assert!((x.re + 2.0 * std::f64::consts::PI.powi(2)).abs() < 1e-12);
        // χ(1/2) = 1
        assert!((chi(c(0.5, 0.0)).unwrap().re - 1.0).abs() < 1e-15);
        assert_eq!(chi(c(-2.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(chi(c(3.0, 0.0)).is_err());
    }

    #[test]
    fn reflection_product() {
        for s in [c(0.3, 7.0), c(0.8, -50.0), c(0.1, 2.0)] {
            let p = chi(s).unwrap() * chi(c(1.0, 0.0) - s).unwrap();
            assert!((p - c(1.0, 0.0)).norm() < 1e-12, "{s}: {p}");
        }
    }
}
