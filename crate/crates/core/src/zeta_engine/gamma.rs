use num_complex::Complex64;

use super::{bernoulli::bernoulli, check_finite, ZetaError};
use num_traits::ToPrimitive;
use std::sync::OnceLock;

const STIRLING_TERMS: usize = 14;
const SHIFT_RADIUS: f64 = 16.0;

fn stirling_coeffs() -> &'static [f64; STIRLING_TERMS] {
    static C: OnceLock<[f64; STIRLING_TERMS]> = OnceLock::new();
    C.get_or_init(|| {
        let mut out = [0.0; STIRLING_TERMS];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = i + 1;
            let b = bernoulli(2 * k).to_f64().unwrap_or(0.0);
            *slot = b / ((2 * k) as f64 * (2 * k - 1) as f64);
        }
        out
    })
}

/// A logarithm of Γ(z).
///
/// The real part is `ln|Γ(z)|`; the imaginary part agrees with the principal
/// log-gamma off the negative real axis. Poles at `z = 0, -1, -2, …` are errors.
pub fn ln_gamma(z: Complex64) -> Result<Complex64, ZetaError> {
    check_finite(z)?;
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(ZetaError::Pole { re: z.re, im: z.im });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 0.5 || w.norm() < SHIFT_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in stirling_coeffs() {
        series += pow * *c;
        pow *= inv2;
    }
    let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    Ok((w - 0.5) * w.ln() - w + half_ln_2pi + series - shift)
}

/// Γ(z) = exp(ln Γ(z)).
pub fn gamma(z: Complex64) -> Result<Complex64, ZetaError> {
    ln_gamma(z).map(|l| l.exp())
}
