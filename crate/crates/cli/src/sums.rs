use std::fmt::Write as _;

use clap::Subcommand;
use zetalab::dirichlet_sums::{
    divisor_phase_sum_direct, divisor_sieve, s1_s2_bound_check, scan_rows, write_scan_csv,
    HyperbolaSums,
};
use zetalab::format::float;
use zetalab::ExponentPair;

use crate::config::Config;
use crate::error::CliError;

/// Longest phase sum the scan accepts.
const MAX_U: u64 = 100_000_000;
/// `bound` keeps a prefix array of this many complex values.
const MAX_PREFIX: u64 = 10_000_000;

#[derive(Debug, Subcommand)]
pub enum SumsCmd {
    /// |Σ_{⌈u/2⌉<n≤u} n^{it}| against T^k N^{l-k} for each pair.
    Scan {
        #[arg(long = "u", value_delimiter = ',', required = true)]
        us: Vec<u64>,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long = "T")]
        big_t: f64,
        /// Semicolon-separated pairs, e.g. "0,1;1/6,2/3".
        #[arg(long, default_value = "1/6,2/3")]
        pairs: String,
    },
    /// Σ_{n≤u} d(n) n^{it} directly and by the hyperbola method.
    Divisor {
        #[arg(long = "u", value_delimiter = ',', required = true)]
        us: Vec<u64>,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// S₁(u,t), S₂(u,t) and their ratios to the exponent-pair estimates.
    Bound {
        #[arg(long)]
        u: u64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long = "T")]
        big_t: f64,
        #[arg(long, default_value = "1/6,2/3")]
        pair: String,
    },
}

fn check_u(u: u64, limit: u64) -> Result<(), CliError> {
    if u > limit {
        return Err(CliError::resource(format!("u = {u} exceeds {limit}")));
    }
    Ok(())
}

pub fn run(cmd: &SumsCmd, cfg: &Config) -> Result<String, CliError> {
    let mut out = String::new();
    match cmd {
        SumsCmd::Scan {
            us,
            t,
            big_t,
            pairs,
        } => {
            us.iter().try_for_each(|&u| check_u(u, MAX_U))?;
            let pairs = pairs
                .split(';')
                .map(ExponentPair::parse)
                .collect::<Result<Vec<_>, _>>()?;
            let rows = scan_rows(us, *t, *big_t, &pairs, cfg.execution())?;
            let mut buf = Vec::new();
            write_scan_csv(&mut buf, &rows)?;
            out = String::from_utf8(buf).expect("csv output is UTF-8");
        }
        SumsCmd::Divisor { us, t } => {
            let top = us.iter().copied().max().unwrap_or(1).max(1);
            if top > cfg.divisor_table_size {
                return Err(CliError::resource(format!(
                    "u = {top} exceeds divisor_table_size {}",
                    cfg.divisor_table_size
                )));
            }
            if us.contains(&0) {
                return Err(CliError::domain("u must be at least 1"));
            }
            let table = divisor_sieve(top)?;
            let hyper = HyperbolaSums::new(top, *t);
            out.push_str("u,t,direct_re,direct_im,hyperbola_re,hyperbola_im,difference\n");
            for &u in us {
                let d = divisor_phase_sum_direct(u, *t, &table)?;
                let h = hyper.divisor_sum(u);
                let _ = writeln!(
                    out,
                    "{u},{},{},{},{},{},{}",
                    float(*t),
                    float(d.re),
                    float(d.im),
                    float(h.re),
                    float(h.im),
                    float((d - h).norm())
                );
            }
        }
        SumsCmd::Bound { u, t, big_t, pair } => {
            check_u(*u, MAX_PREFIX)?;
            let p = ExponentPair::parse(pair)?;
            let r = s1_s2_bound_check(*u, *t, &p, *big_t)?;
            out.push_str("u,t,T,n,s1_abs,s2_abs,ratio1,ratio2\n");
            let _ = writeln!(
                out,
                "{u},{},{},{},{},{},{},{}",
                float(*t),
                float(*big_t),
                r.n,
                float(r.s1.norm()),
                float(r.s2.norm()),
                float(r.ratio1),
                float(r.ratio2)
            );
        }
    }
    Ok(out)
}
