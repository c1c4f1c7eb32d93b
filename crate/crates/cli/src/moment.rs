use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Subcommand;
use num_complex::Complex64;
use zetalab::format::float;
use zetalab::moment_lab::{
    dyadic_scan, integrate_moment, sixth_moment_probe, split_i1_i2, watt_ratio, write_results_csv,
    MomentSpec,
};
use zetalab::report::regression_report;

use crate::config::Config;
use crate::error::CliError;

pub const REPORT_FILE: &str = "regression_report.csv";

#[derive(Debug, Subcommand)]
pub enum MomentCmd {
    /// ∫ |ζ(1/2+it)|⁴ |ζ(σ+it)|^{2j} dt over [t-min, T].
    Integrate {
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[arg(long = "T")]
        big_t: f64,
        #[arg(long, default_value_t = 0.0)]
        t_min: f64,
    },
    /// Moments at ascending heights and a log-log growth fit, as JSON.
    Scan {
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long, default_value_t = 1)]
        j: u32,
        #[arg(long = "T-list", value_delimiter = ',', required = true)]
        t_list: Vec<f64>,
    },
    /// The two integrals I₁ (smoothed Dirichlet polynomial) and I₂ (inner window of half-width log²T).
    Split {
        #[arg(long = "T")]
        big_t: f64,
        #[arg(long)]
        sigma: f64,
        /// Defaults to T^{1/(6−4σ)}.
        #[arg(long = "Y")]
        y: Option<f64>,
    },
    /// ∫₀^T |Σ a_m m^{it}|² |ζ(1/2+it)|⁴ dt against T^{1.01} M (1 + M²T^{-1/2}) max|a_m|².
    Watt {
        #[arg(long = "T")]
        big_t: f64,
        /// Comma-separated coefficients such as `1,0.5-0.25i,2i`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "m")]
        coeffs: Option<String>,
        /// Use a_m = m^{-power} for m ≤ M.
        #[arg(long = "M", requires = "power")]
        m: Option<usize>,
        #[arg(long)]
        power: Option<f64>,
    },
    /// ∫₀^T |ζ(1/2+it)|⁶ dt and its ratio to T^{5/4}.
    Sixth {
        #[arg(long = "T")]
        big_t: f64,
    },
    /// Write the regression table to the output directory and print it.
    Report,
}

fn parse_complex(text: &str) -> Option<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    // Split before the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (body[..i].parse().ok()?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().ok()?,
    };
    Some(Complex64::new(re, im))
}

fn coefficients(
    coeffs: &Option<String>,
    m: Option<usize>,
    power: Option<f64>,
) -> Result<Vec<Complex64>, CliError> {
    match (coeffs, m, power) {
        (Some(text), _, _) => text
            .split(',')
            .map(|c| {
                parse_complex(c).ok_or_else(|| CliError::usage(format!("bad coefficient {c:?}")))
            })
            .collect(),
        (None, Some(m), Some(p)) => {
            if m == 0 || m > 100_000 {
                return Err(CliError::domain(format!("M = {m} outside 1..=100000")));
            }
            Ok((1..=m)
                .map(|k| Complex64::new((k as f64).powf(-p), 0.0))
                .collect())
        }
        _ => Err(CliError::usage("give --coeffs or --M with --power")),
    }
}

pub fn run(cmd: &MomentCmd, cfg: &Config) -> Result<String, CliError> {
    let st = cfg.eval_settings();
    let scheme = cfg.scheme();
    let exec = cfg.execution();
    let mut out = String::new();
    match cmd {
        MomentCmd::Integrate {
            sigma,
            j,
            big_t,
            t_min,
        } => {
            let spec = MomentSpec::new(*sigma, *j, *t_min, *big_t).with_scheme(scheme);
            let r = integrate_moment(&spec, &st, exec)?;
            let mut buf = Vec::new();
            write_results_csv(&mut buf, &[r])?;
            out = String::from_utf8(buf).expect("csv output is UTF-8");
        }
        MomentCmd::Scan { sigma, j, t_list } => {
            let fit = dyadic_scan(*sigma, *j, t_list, &scheme, &st, exec)?;
            out = fit.to_json() + "\n";
        }
        MomentCmd::Split { big_t, sigma, y } => {
            let y = y.unwrap_or_else(|| big_t.powf(1.0 / (6.0 - 4.0 * sigma)));
            let r = split_i1_i2(*big_t, *sigma, y, &scheme, &st, exec)?;
            out.push_str(
                "T,sigma,Y,i1,i1_error,i2,i2_error,prefactor,inner_half_width,smoothed_terms\n",
            );
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                float(*big_t),
                float(*sigma),
                float(y),
                float(r.i1),
                float(r.i1_error),
                float(r.i2),
                float(r.i2_error),
                float(r.prefactor),
                float(r.inner_half_width),
                r.smoothed_terms
            );
        }
        MomentCmd::Watt {
            big_t,
            coeffs,
            m,
            power,
        } => {
            let a = coefficients(coeffs, *m, *power)?;
            let r = watt_ratio(*big_t, &a, &scheme, &st, exec)?;
            out.push_str("T,M,lhs,lhs_error,rhs,ratio\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                float(*big_t),
                a.len(),
                float(r.lhs),
                float(r.lhs_error),
                float(r.rhs),
                float(r.ratio)
            );
        }
        MomentCmd::Sixth { big_t } => {
            let r = sixth_moment_probe(*big_t, &scheme, &st, exec)?;
            out.push_str("T,value,error_estimate,probe\n");
            let _ = writeln!(
                out,
                "{},{},{},{}",
                float(*big_t),
                float(r.value),
                float(r.error_estimate),
                float(r.probe)
            );
        }
        MomentCmd::Report => {
            let report = regression_report(&st, &scheme, exec)?;
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            std::fs::create_dir_all(&cfg.output_dir)?;
            let path: PathBuf = cfg.output_dir.join(REPORT_FILE);
            std::fs::write(&path, &buf)?;
            out = String::from_utf8(buf).expect("csv output is UTF-8");
        }
    }
    Ok(out)
}
