use num_complex::Complex64;

use super::euler_maclaurin::{check_zeta_domain, tail_terms};
use super::{zeta, EvalSettings, TermCount, ZetaError};

/// A finite Dirichlet polynomial `Σ_{n=1}^{len} a_n n^{-it}`, evaluated in `t` only.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletPoly {
    /// `coeffs[n-1] = a_n`.
    pub coeffs: Vec<Complex64>,
}

impl DirichletPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        DirichletPoly { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Evaluates ζ(σ_i + it) for a fixed set of abscissae, and optionally extra
/// Dirichlet polynomials, sharing the phases `n^{-it}` between all of them.
#[derive(Debug, Clone)]
pub struct LineEvaluator {
    sigmas: Vec<f64>,
    settings: EvalSettings,
    ln_n: Vec<f64>,
    /// `weights[i][n-1] = n^{-σ_i}`.
    weights: Vec<Vec<f64>>,
    max_t: f64,
}

impl LineEvaluator {
    /// Prepares tables for `|t| ≤ max_t`.
    pub fn new(sigmas: &[f64], max_t: f64, settings: EvalSettings) -> Result<Self, ZetaError> {
        settings.validate()?;
        for &sigma in sigmas {
            check_zeta_domain(Complex64::new(sigma, max_t))?;
        }
        let len = Self::terms_for(&settings, max_t);
        let ln_n: Vec<f64> = (1..=len).map(|n| (n as f64).ln()).collect();
        let weights = sigmas
            .iter()
            .map(|&sigma| ln_n.iter().map(|l| (-sigma * l).exp()).collect())
            .collect();
        Ok(LineEvaluator {
            sigmas: sigmas.to_vec(),
            settings,
            ln_n,
            weights,
            max_t: max_t.abs(),
        })
    }

    fn terms_for(settings: &EvalSettings, t: f64) -> usize {
        match settings.euler_maclaurin_terms {
            TermCount::Auto => EvalSettings::auto_terms(t),
            TermCount::Fixed(n) => n,
        }
    }

    pub fn sigmas(&self) -> &[f64] {
        &self.sigmas
    }

    /// ζ(σ_i + it) for every configured σ_i.
    pub fn zeta_values(&self, t: f64) -> Result<Vec<Complex64>, ZetaError> {
        self.evaluate(t, &[]).map(|(z, _)| z)
    }

    /// ζ(σ_i + it) for every σ_i, and each polynomial at `t`.
    pub fn evaluate(
        &self,
        t: f64,
        polys: &[&DirichletPoly],
    ) -> Result<(Vec<Complex64>, Vec<Complex64>), ZetaError> {
        if !(t.abs() <= self.max_t) {
            return Err(ZetaError::Domain(format!(
                "t = {t} beyond prepared height {}",
                self.max_t
            )));
        }
        let n_direct = Self::terms_for(&self.settings, t);
        let zeta_len = n_direct - 1;
        let poly_len = polys.iter().map(|p| p.len()).max().unwrap_or(0);
        let total = zeta_len.max(poly_len);
        let mut z_acc = vec![Complex64::new(0.0, 0.0); self.sigmas.len()];
        let mut p_acc = vec![Complex64::new(0.0, 0.0); polys.len()];
        for idx in 0..total {
            let ln = match self.ln_n.get(idx) {
                Some(&l) => l,
                None => ((idx + 1) as f64).ln(),
            };
            let (sin, cos) = (t * ln).sin_cos();
            if idx < zeta_len {
                for (acc, w) in z_acc.iter_mut().zip(&self.weights) {
                    let wn = w[idx];
                    acc.re += wn * cos;
                    acc.im -= wn * sin;
                }
            }
            for (acc, p) in p_acc.iter_mut().zip(polys) {
                if let Some(a) = p.coeffs.get(idx) {
                    acc.re += a.re * cos + a.im * sin;
                    acc.im += a.im * cos - a.re * sin;
                }
            }
        }
        for (acc, &sigma) in z_acc.iter_mut().zip(&self.sigmas) {
            let s = Complex64::new(sigma, t);
            let (tail, bound) = tail_terms(s, n_direct, self.settings.bernoulli_order);
            if bound <= self.settings.target_abs_error {
                *acc += tail;
            } else {
                *acc = zeta(s, &self.settings)?;
            }
        }
        Ok((z_acc, p_acc))
    }
}
