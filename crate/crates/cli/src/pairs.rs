use std::fmt::Write as _;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;
use zetalab::exponent_calculus::{
    enumerate_pairs, mu_threshold, optimize, parse_constraint, parse_objective, parse_rational,
    q_family_set, theorem1_threshold, theorem2_threshold, Objective, PairSet, TheoremObjective,
    Threshold,
};
use zetalab::format::rational;
use zetalab::{ExponentPair, Rational};

use crate::config::Config;
use crate::error::{CliError, Kind};

/// Enumeration grows roughly like 2^depth.
const MAX_DEPTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    /// Comma-separated seed names: trivial, huxley-32-205, huxley-89-570.
    #[arg(long, value_delimiter = ',', default_value = "trivial")]
    seeds: Vec<String>,
    /// Maximum A/B word length. Words apply right to left: AB(p) = A(B(p)).
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Use the q-family pairs for q in a:b instead of enumerating seeds.
    #[arg(long, value_name = "A:B")]
    q_range: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum PairsCmd {
    /// Closure of the seeds under A/B words up to the given depth.
    Enumerate {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Minimize an objective (or a theorem threshold) over a pair set.
    Optimize {
        #[command(flatten)]
        set: SetArgs,
        /// Linear-fractional objective, e.g. "(5k + l)/(4k + 1)".
        #[arg(long, conflicts_with = "theorem")]
        objective: Option<String>,
        /// Minimize the threshold of theorem 1 or 2, including its hypothesis.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: Option<u8>,
        /// Linear constraint, e.g. "3k + l < 1".
        #[arg(long)]
        constraint: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Threshold on σ for a pair, a pair set, or a bound on μ(1/2).
    Thresholds {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), default_value_t = 1)]
        theorem: u8,
        /// A single pair "k,l", e.g. 32/205,269/410.
        #[arg(long, conflicts_with_all = ["q_range", "mu"])]
        pair: Option<String>,
        /// Report (1/2 + 6jμ)/(1 + 4jμ) for this μ instead of a pair threshold.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 1, requires = "mu")]
        j: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn parse_q_range(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || {
        CliError::usage(format!(
            "--q-range expects A:B with integers A <= B, got {text:?}"
        ))
    };
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn build_set(args: &SetArgs, cfg: &Config) -> Result<PairSet, CliError> {
    if let Some(range) = &args.q_range {
        let (a, b) = parse_q_range(range)?;
        return Ok(q_family_set(a..=b)?);
    }
    if args.depth > MAX_DEPTH {
        return Err(CliError::resource(format!(
            "depth {} exceeds {MAX_DEPTH}",
            args.depth
        )));
    }
    let names: Vec<&str> = args.seeds.iter().map(|s| s.trim()).collect();
    let seeds = PairSet::from_seed_names(&names)?;
    Ok(enumerate_pairs(&seeds, args.depth, cfg.execution()))
}

fn pair_json(p: &ExponentPair) -> serde_json::Value {
    json!({
        "k": rational(p.k()),
        "l": rational(p.l()),
        "word": p.word(),
        "epsilon": p.carries_epsilon(),
    })
}

pub fn run(cmd: &PairsCmd, cfg: &Config) -> Result<String, CliError> {
    match cmd {
        PairsCmd::Enumerate { set, format } => {
            let set = build_set(set, cfg)?;
            match format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    set.write_csv(&mut buf)?;
                    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
                }
                Format::Json => Ok(set.to_json()? + "\n"),
            }
        }
        PairsCmd::Optimize {
            set,
            objective,
            theorem,
            constraint,
            format,
        } => {
            let pairs = build_set(set, cfg)?;
            let constraint = constraint.as_deref().map(parse_constraint).transpose()?;
            let objective: Box<dyn Objective> = match (objective, theorem) {
                (Some(text), _) => Box::new(parse_objective(text)?),
                (None, Some(n)) => {
                    Box::new(TheoremObjective::from_number(*n).expect("range-checked"))
                }
                (None, None) => return Err(CliError::usage("give --objective or --theorem")),
            };
            let best = optimize(
                objective.as_ref(),
                &pairs,
                constraint.as_ref(),
                cfg.execution(),
            )?;
            let p = &best.entry.pair;
            Ok(match format {
                Format::Csv => format!(
                    "seed,word,k,l,value\n{},{},{},{},{}\n",
                    best.entry.seed,
                    p.word(),
                    rational(p.k()),
                    rational(p.l()),
                    rational(&best.value)
                ),
                Format::Json => {
                    let mut v = pair_json(p);
                    v["seed"] = json!(best.entry.seed);
                    v["value"] = json!(rational(&best.value));
                    format!("{v:#}\n")
                }
            })
        }
        PairsCmd::Thresholds {
            set,
            theorem,
            pair,
            mu,
            j,
            format,
        } => {
            if let Some(mu) = mu {
                return mu_row(*j, &parse_rational(mu)?, *format);
            }
            let compute = |p: &ExponentPair| match theorem {
                1 => theorem1_threshold(p),
                _ => theorem2_threshold(p),
            };
            let rows: Vec<(ExponentPair, Threshold)> = match pair {
                Some(text) => {
                    let p = ExponentPair::parse(text)?;
                    let t = compute(&p)?;
                    vec![(p, t)]
                }
                None => build_set(set, cfg)?
                    .pairs()
                    .filter_map(|p| compute(p).ok().map(|t| (p.clone(), t)))
                    .collect(),
            };
            if rows.is_empty() {
                return Err(CliError::new(
                    Kind::Empty,
                    "no pair satisfies the theorem's hypothesis",
                ));
            }
            Ok(threshold_output(&rows, *format))
        }
    }
}

fn threshold_output(rows: &[(ExponentPair, Threshold)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("k,l,word,theorem,pair_value,sigma,relation\n");
            for (p, t) in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    rational(p.k()),
                    rational(p.l()),
                    p.word(),
                    t.theorem,
                    rational(&t.pair_value),
                    rational(&t.sigma),
                    t.relation.symbol()
                );
            }
            out
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(p, t)| {
                    let mut v = pair_json(p);
                    v["theorem"] = json!(t.theorem);
                    v["pair_value"] = json!(rational(&t.pair_value));
                    v["sigma"] = json!(rational(&t.sigma));
                    v["relation"] = json!(t.relation.symbol());
                    v
                })
                .collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
    }
}

fn mu_row(j: u32, mu: &Rational, format: Format) -> Result<String, CliError> {
    let m = mu_threshold(j, mu)?;
    Ok(match format {
        Format::Csv => format!(
            "j,mu,value,feasible\n{j},{},{},{}\n",
            rational(mu),
            rational(&m.value),
            m.feasible
        ),
        Format::Json => format!(
            "{:#}\n",
            json!({ "j": j, "mu": rational(mu), "value": rational(&m.value), "feasible": m.feasible })
        ),
    })
}
