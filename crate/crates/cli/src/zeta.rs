use std::f64::consts::PI;

use clap::{Subcommand, ValueEnum};
use num_complex::Complex64;
use zetalab::dirichlet_sums::divisor_sieve;
use zetalab::zeta_engine::{
    afe_simple, afe_zeta_squared, fe_grid, functional_equation_residual, smoothed_sum,
    smoothing_pole_term, write_scan_csv, zeta, zeta_with_bound, FeGrid, ScanRow, ZetaError,
};

use crate::config::Config;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    /// 10 σ × 10 t cells.
    Coarse,
    /// 10 σ × 100 t cells.
    Fine,
}

#[derive(Debug, Subcommand)]
pub enum ZetaCmd {
    /// ζ(σ+it) with its Euler–Maclaurin remainder bound in the `bound` column.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Σ_{n ≤ cutoff} n^{-s} and its distance from ζ(s).
    Afe {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Defaults to |t|.
        #[arg(long)]
        cutoff: Option<f64>,
    },
    /// Two-sided divisor-sum form of ζ²(s) with residual, bound x^{1/2-σ} log t and ratio.
    Afe2 {
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        t: f64,
        /// `balanced` (x = y = t/2π) or a number.
        #[arg(long, default_value = "balanced")]
        x: String,
    },
    /// Σ e^{-n/Y} n^{-s}; residual is |sum − ζ(s) − Γ(1−s)Y^{1−s}|, bound is Y^{1/2−σ}.
    Smooth {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long = "Y")]
        y: f64,
    },
    /// Functional-equation residual |ζ(s) − χ(s)ζ(1−s)| over a grid in 0 < σ < 1, |t| < 100.
    FeCheck {
        #[arg(long, value_enum, default_value = "coarse")]
        grid: Grid,
    },
}

fn point(sigma: f64, t: f64) -> Result<Complex64, CliError> {
    if !(sigma.is_finite() && t.is_finite()) {
        return Err(CliError::domain("sigma and t must be finite"));
    }
    Ok(Complex64::new(sigma, t))
}

fn csv(rows: &[ScanRow]) -> Result<String, CliError> {
    let mut buf = Vec::new();
    write_scan_csv(&mut buf, rows)?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

fn row(s: Complex64, x_or_y: Option<f64>, value: Complex64) -> ScanRow {
    ScanRow {
        sigma: s.re,
        t: s.im,
        x_or_y,
        value,
        residual: None,
        bound: None,
        ratio: None,
    }
}

/// Returns the CSV and, for grid commands, a one-line summary for stderr.
pub fn run(cmd: &ZetaCmd, cfg: &Config) -> Result<(String, Option<String>), CliError> {
    let st = cfg.eval_settings();
    let rows = match *cmd {
        ZetaCmd::Eval { sigma, t } => {
            let s = point(sigma, t)?;
            let e = zeta_with_bound(s, &st)?;
            vec![ScanRow {
                bound: Some(e.remainder_bound),
                ..row(s, None, e.value)
            }]
        }
        ZetaCmd::Afe { sigma, t, cutoff } => {
            let s = point(sigma, t)?;
            let cutoff = cutoff.unwrap_or(t.abs());
            let r = afe_simple(s, cutoff, &st)?;
            vec![ScanRow {
                residual: Some(r.residual),
                ..row(s, Some(cutoff), r.value)
            }]
        }
        ZetaCmd::Afe2 { sigma, t, ref x } => {
            let s = point(sigma, t)?;
            let x = match x.as_str() {
                "balanced" => t / (2.0 * PI),
                other => other.parse::<f64>().map_err(|_| {
                    CliError::usage(format!("--x expects `balanced` or a number, got {other:?}"))
                })?,
            };
            // A one-entry table surfaces domain errors before any sieving.
            let r = match afe_zeta_squared(s, x, &divisor_sieve(1)?, &st) {
                Err(ZetaError::TableTooSmall { needed, .. }) => {
                    if needed as u64 > cfg.divisor_table_size {
                        return Err(CliError::resource(format!(
                            "x = {x} needs a divisor table to {needed}, configured size is {}",
                            cfg.divisor_table_size
                        )));
                    }
                    afe_zeta_squared(s, x, &divisor_sieve(needed as u64)?, &st)?
                }
                other => other?,
            };
            vec![ScanRow {
                residual: Some(r.residual),
                bound: Some(r.bound),
                ratio: Some(r.ratio),
                ..row(s, Some(x), r.value)
            }]
        }
        ZetaCmd::Smooth { sigma, t, y } => {
            let s = point(sigma, t)?;
            let mult = cfg.smoothing_multiplier.max(t.abs().max(10.0).ln().powi(2));
            let sum = smoothed_sum(s, y, mult)?;
            let residual = (sum.value - zeta(s, &st)? - smoothing_pole_term(s, y)?).norm();
            let bound = y.powf(0.5 - sigma);
            vec![ScanRow {
                residual: Some(residual),
                bound: Some(bound),
                ratio: Some(residual / bound),
                ..row(s, Some(y), sum.value)
            }]
        }
        ZetaCmd::FeCheck { grid } => {
            let kind = match grid {
                Grid::Coarse => FeGrid::Coarse,
                Grid::Fine => FeGrid::Fine,
            };
            let rows = fe_grid(kind)
                .into_iter()
                .map(|s| {
                    let residual = functional_equation_residual(s, &st)?;
                    Ok(ScanRow {
                        residual: Some(residual),
                        ..row(s, None, zeta(s, &st)?)
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let max = rows.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
            let summary = format!("{} points, max residual {max:e}", rows.len());
            return Ok((csv(&rows)?, Some(summary)));
        }
    };
    Ok((csv(&rows)?, None))
}
