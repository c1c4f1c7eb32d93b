use std::io::Write;

use num_complex::Complex64;

use super::{phase_sum, HyperbolaSums, SumError, SumWindow};
use crate::exec::Execution;
use crate::exponent_calculus::{to_f64, ExponentPair};
use crate::format::float;

/// `T^k N^{ℓ-k}`, the exponent-pair magnitude for a window of length `N` at height `T`.
pub fn vdc_magnitude(big_t: f64, n: f64, pair: &ExponentPair) -> f64 {
    let k = to_f64(pair.k());
    let l = to_f64(pair.l());
    big_t.powf(k) * n.powf(l - k)
}

/// [`vdc_magnitude`] for the window's `N`. The comparison is meaningful for `T ≤ t ≤ 2T`.
pub fn vdc_bound(w: &SumWindow, pair: &ExponentPair, big_t: f64) -> Result<f64, SumError> {
    check_height(big_t, 0.0)?;
    Ok(vdc_magnitude(big_t, w.n() as f64, pair))
}

fn check_height(big_t: f64, above: f64) -> Result<(), SumError> {
    if big_t.is_finite() && big_t > above {
        Ok(())
    } else {
        Err(SumError::Domain(format!(
            "T = {big_t} must be a finite number > {above}"
        )))
    }
}

/// Largest power of two not exceeding `u` (`u ≥ 1`).
pub fn dyadic_floor(u: u64) -> u64 {
    assert!(u >= 1, "dyadic_floor(0)");
    1u64 << (63 - u.leading_zeros())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundRatios {
    pub s1: Complex64,
    pub s2: Complex64,
    /// Dyadic `N` with `N ≤ u < 2N`.
    pub n: u64,
    /// `|S₁| / (T^k N^{(ℓ-k+1)/2} log T)`.
    pub ratio1: f64,
    /// `|S₂| / (T^k N^{(ℓ-k)/2} log T)`.
    pub ratio2: f64,
}

/// Measures `S₁(u,t)` and `S₂(u,t)` against their exponent-pair estimates.
/// Purely observational: the implied constants are unknown.
pub fn s1_s2_bound_check(
    u: u64,
    t: f64,
    pair: &ExponentPair,
    big_t: f64,
) -> Result<BoundRatios, SumError> {
    if u < 1 {
        return Err(SumError::Domain("u must be at least 1".into()));
    }
    check_height(big_t, 1.0)?;
    let sums = HyperbolaSums::new(u, t);
    let (s1, s2) = (sums.s1(u), sums.s2(u));
    let n = dyadic_floor(u);
    let k = to_f64(pair.k());
    let l = to_f64(pair.l());
    let base = big_t.powf(k) * big_t.ln();
    let nf = n as f64;
    Ok(BoundRatios {
        s1,
        s2,
        n,
        ratio1: s1.norm() / (base * nf.powf(0.5 * (l - k + 1.0))),
        ratio2: s2.norm() / (base * nf.powf(0.5 * (l - k))),
    })
}

pub const SUM_SCAN_HEADER: &str = "u,t,T,k_num,k_den,l_num,l_den,abs_sum,bound,ratio";

#[derive(Debug, Clone, PartialEq)]
pub struct SumScanRow {
    pub u: u64,
    pub t: f64,
    pub big_t: f64,
    pub pair: ExponentPair,
    /// `|Σ_{⌈u/2⌉ < n ≤ u} n^{it}|`.
    pub abs_sum: f64,
    pub bound: f64,
    pub ratio: f64,
}

/// Phase sums over the windows `⌈u/2⌉ < n ≤ u` compared with `T^k N^{ℓ-k}` for each pair.
pub fn scan_rows(
    us: &[u64],
    t: f64,
    big_t: f64,
    pairs: &[ExponentPair],
    exec: Execution,
) -> Result<Vec<SumScanRow>, SumError> {
    check_height(big_t, 0.0)?;
    let windows = us
        .iter()
        .map(|&u| SumWindow::new(u.div_ceil(2), u, t))
        .collect::<Result<Vec<_>, _>>()?;
    let sums = exec.map(&windows, |w| phase_sum(w).norm());
    let mut rows = Vec::with_capacity(us.len() * pairs.len());
    for (w, abs_sum) in windows.iter().zip(sums) {
        for pair in pairs {
            let bound = vdc_bound(w, pair, big_t)?;
            rows.push(SumScanRow {
                u: w.n_prime(),
                t,
                big_t,
                pair: pair.clone(),
                abs_sum,
                bound,
                ratio: abs_sum / bound,
            });
        }
    }
    Ok(rows)
}

pub fn write_scan_csv<W: Write>(mut out: W, rows: &[SumScanRow]) -> std::io::Result<()> {
    writeln!(out, "{SUM_SCAN_HEADER}")?;
    for r in rows {
        let (k, l) = (r.pair.k(), r.pair.l());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.u,
            float(r.t),
            float(r.big_t),
            k.numer(),
            k.denom(),
            l.numer(),
            l.denom(),
            float(r.abs_sum),
            float(r.bound),
            float(r.ratio)
        )?;
    }
    Ok(())
}
