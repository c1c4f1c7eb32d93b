//! `zetalab`: exponent-pair thresholds, zeta-function checks and
//! fourth-moment quadrature from the command line.
//!
//! Exit codes: 0 ok, 1 usage or parse error, 2 empty result, 3 domain error,
//! 4 resource limit.

mod config;
mod error;
mod moment;
mod pairs;
mod sums;
mod zeta;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::Config;
use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Exponent pairs, zeta-function numerics and hybrid moment integrals"
)]
struct Cli {
    /// Configuration file (flat `key = value`). Falls back to $ZETALAB_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for data-parallel loops; overrides the config.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for written reports; overrides the config.
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exponent-pair enumeration, optimization and thresholds.
    Pairs {
        #[command(subcommand)]
        cmd: pairs::PairsCmd,
    },
    /// ζ evaluation and approximate-functional-equation checks.
    Zeta {
        #[command(subcommand)]
        cmd: zeta::ZetaCmd,
    },
    /// Moment integrals, growth scans and the regression report.
    Moment {
        #[command(subcommand)]
        cmd: moment::MomentCmd,
    },
    /// Dirichlet phase sums and divisor sums.
    Sums {
        #[command(subcommand)]
        cmd: sums::SumsCmd,
    },
    /// Configuration utilities.
    Config {
        #[command(subcommand)]
        cmd: ConfigCmd,
    },
}

#[derive(Debug, Subcommand)]
enum ConfigCmd {
    /// Print the effective configuration in the file format.
    Dump,
}

fn effective_config(cli: &Cli) -> Result<Config, CliError> {
    let mut cfg = Config::load(cli.config.as_deref())?;
    if let Some(n) = cli.threads {
        cfg.threads = n;
    }
    if let Some(dir) = &cli.output_dir {
        cfg.output_dir = dir.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<(String, Option<String>), CliError> {
    let cfg = effective_config(cli)?;
    match &cli.command {
        Command::Pairs { cmd } => Ok((pairs::run(cmd, &cfg)?, None)),
        Command::Zeta { cmd } => zeta::run(cmd, &cfg),
        Command::Moment { cmd } => {
            let out = moment::run(cmd, &cfg)?;
            let note = matches!(cmd, moment::MomentCmd::Report).then(|| {
                format!(
                    "wrote {}",
                    cfg.output_dir.join(moment::REPORT_FILE).display()
                )
            });
            Ok((out, note))
        }
        Command::Sums { cmd } => Ok((sums::run(cmd, &cfg)?, None)),
        Command::Config {
            cmd: ConfigCmd::Dump,
        } => Ok((cfg.dump(), None)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((out, note)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(4);
            }
            if let Some(note) = note {
                eprintln!("{note}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(detail) = e.detail {
                eprintln!("\n{detail}");
            }
            e.exit_code()
        }
    }
}
