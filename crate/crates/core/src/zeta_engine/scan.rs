use std::io::Write;

use num_complex::Complex64;

use crate::format::float;

pub const SCAN_HEADER: &str = "sigma,t,x_or_Y,value_re,value_im,residual,bound,ratio";

/// One row of a zeta-engine grid scan. Absent quantities are written as empty fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub sigma: f64,
    pub t: f64,
    pub x_or_y: Option<f64>,
    pub value: Complex64,
    pub residual: Option<f64>,
    pub bound: Option<f64>,
    pub ratio: Option<f64>,
}

fn opt(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

pub fn write_scan_csv<W: Write>(mut out: W, rows: &[ScanRow]) -> std::io::Result<()> {
    writeln!(out, "{SCAN_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            float(r.sigma),
            float(r.t),
            opt(r.x_or_y),
            float(r.value.re),
            float(r.value.im),
            opt(r.residual),
            opt(r.bound),
            opt(r.ratio)
        )?;
    }
    Ok(())
}

/// Preset grids of points inside the critical strip for functional-equation checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeGrid {
    /// 10 × 10 points.
    Coarse,
    /// 10 × 100 points.
    Fine,
}

/// Points `σ ∈ {0.05, 0.15, …, 0.95}` crossed with cell-centred `t ∈ (-100, 100)`.
pub fn fe_grid(kind: FeGrid) -> Vec<Complex64> {
    let nt = match kind {
        FeGrid::Coarse => 10,
        FeGrid::Fine => 100,
    };
    let mut out = Vec::with_capacity(10 * nt);
    for i in 0..10 {
        let sigma = 0.05 + 0.1 * i as f64;
        for j in 0..nt {
            let t = -100.0 + 200.0 * (j as f64 + 0.5) / nt as f64;
            out.push(Complex64::new(sigma, t));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_avoids_singular_points() {
        let g = fe_grid(FeGrid::Fine);
        assert_eq!(g.len(), 1000);
        for s in &g {
            assert!(s.norm() > 1e-3 && (s - 1.0).norm() > 1e-3);
            assert!(s.re > 0.0 && s.re < 1.0 && s.im.abs() <= 100.0);
        }
        assert_eq!(fe_grid(FeGrid::Coarse).len(), 100);
    }

    #[test]
    fn csv_layout() {
        let rows = [ScanRow {
            sigma: 0.5,
            t: 14.0,
            x_or_y: None,
            value: Complex64::new(1.0, -0.25),
            residual: Some(1e-12),
            bound: None,
            ratio: None,
        }];
        let mut buf = Vec::new();
        write_scan_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, format!("{SCAN_HEADER}\n0.5,14,,1,-0.25,1e-12,,\n"));
    }
}
