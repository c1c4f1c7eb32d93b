use serde::{Deserialize, Serialize};

use super::integrand::MomentIntegrand;
use super::{MomentError, MomentSpec, MAX_MOMENT_T};
use crate::exec::Execution;
use crate::quadrature::{integrate, PanelScheme};
use crate::zeta_engine::EvalSettings;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthSample {
    pub t: f64,
    pub value: f64,
}

/// Least-squares line through `(log T, log value)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    pub samples: Vec<GrowthSample>,
    pub exponent: f64,
    pub intercept: f64,
    pub residual_rms: f64,
}

impl GrowthFit {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn fit_growth(samples: &[GrowthSample]) -> Result<GrowthFit, MomentError> {
    if samples.len() < 3 {
        return Err(MomentError::DegenerateFit(format!(
            "{} samples, need at least 3",
            samples.len()
        )));
    }
    if let Some(s) = samples.iter().find(|s| !(s.value > 0.0 && s.t > 0.0)) {
        return Err(MomentError::DegenerateFit(format!(
            "non-positive sample T = {}, value = {}",
            s.t, s.value
        )));
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.t.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.value.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(MomentError::DegenerateFit("all T equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let rss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - exponent * x).powi(2))
        .sum();
    Ok(GrowthFit {
        samples: samples.to_vec(),
        exponent,
        intercept,
        residual_rms: (rss / n).sqrt(),
    })
}

/// Moments `∫_0^T` for each `T` in an ascending list, accumulated over
/// consecutive segments, then fitted by [`fit_growth`].
pub fn dyadic_scan(
    sigma: f64,
    j: u32,
    t_list: &[f64],
    scheme: &PanelScheme,
    settings: &EvalSettings,
    exec: Execution,
) -> Result<GrowthFit, MomentError> {
    if t_list.len() < 3 {
        return Err(MomentError::Domain(format!(
            "{} heights given, need at least 3",
            t_list.len()
        )));
    }
    if t_list.windows(2).any(|w| !(w[0] < w[1])) || !(t_list[0] > 0.0) {
        return Err(MomentError::Domain(
            "heights must be positive and strictly ascending".into(),
        ));
    }
    let top = *t_list.last().expect("non-empty");
    if top > MAX_MOMENT_T {
        return Err(MomentError::Resource(format!(
            "T = {top} exceeds {MAX_MOMENT_T}"
        )));
    }
    MomentSpec {
        sigma,
        j,
        t_min: 0.0,
        t_max: top,
        scheme: *scheme,
    }
    .validate()?;
    let integrand = MomentIntegrand::new(sigma, j, top, settings)?;
    let mut samples = Vec::with_capacity(t_list.len());
    let mut total = 0.0;
    let mut lower = 0.0;
    for &t in t_list {
        let r = integrate(|x| integrand.eval(x), lower, t, scheme, exec)?;
        total += r.value;
        samples.push(GrowthSample { t, value: total });
        lower = t;
    }
    fit_growth(&samples)
}
