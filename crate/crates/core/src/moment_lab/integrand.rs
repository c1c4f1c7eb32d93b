use num_complex::Complex64;

use super::MomentError;
use crate::zeta_engine::{DirichletPoly, EvalSettings, LineEvaluator};

/// `|ζ(1/2+it)|⁴ |ζ(σ+it)|^{2j} |P(t)|^{2p}` for an optional Dirichlet polynomial `P`.
pub(crate) struct MomentIntegrand {
    evaluator: LineEvaluator,
    j: u32,
    /// Index of σ in the evaluator's abscissae, when `j > 0`.
    sigma_index: usize,
    poly: Option<DirichletPoly>,
}

impl MomentIntegrand {
    pub(crate) fn new(
        sigma: f64,
        j: u32,
        max_t: f64,
        settings: &EvalSettings,
    ) -> Result<Self, MomentError> {
        let sigmas: Vec<f64> = if j == 0 || sigma == 0.5 {
            vec![0.5]
        } else {
            vec![0.5, sigma]
        };
        let sigma_index = sigmas.len() - 1;
        Ok(MomentIntegrand {
            evaluator: LineEvaluator::new(&sigmas, max_t, *settings)?,
            j,
            sigma_index,
            poly: None,
        })
    }

    /// Multiplies the integrand by `|Σ_n a_n n^{-it}|²`.
    pub(crate) fn with_poly(mut self, poly: DirichletPoly) -> Self {
        self.poly = Some(poly);
        self
    }

    /// `ζ(1/2+it)`, and the polynomial value if any.
    pub(crate) fn parts(
        &self,
        t: f64,
    ) -> Result<(Complex64, Option<Complex64>, Complex64), MomentError> {
        let polys: Vec<&DirichletPoly> = self.poly.iter().collect();
        let (z, p) = self.evaluator.evaluate(t, &polys)?;
        Ok((z[0], p.first().copied(), z[self.sigma_index]))
    }

    pub(crate) fn eval(&self, t: f64) -> Result<f64, MomentError> {
        let (half, poly, other) = self.parts(t)?;
        let h = half.norm_sqr();
        let mut v = h * h;
        if self.j > 0 {
            v *= other.norm_sqr().powi(self.j as i32);
        }
        if let Some(p) = poly {
            v *= p.norm_sqr();
        }
        Ok(v)
    }
}
