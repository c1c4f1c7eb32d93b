//! Flat `key = value` configuration with `#` comment lines.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use zetalab::dirichlet_sums::MAX_TABLE_SIZE;
use zetalab::quadrature::PanelScheme;
use zetalab::zeta_engine::{EvalSettings, TermCount};
use zetalab::Execution;

use crate::error::CliError;

pub const CONFIG_ENV: &str = "ZETALAB_CONFIG";

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub threads: usize,
    pub output_dir: PathBuf,
    pub divisor_table_size: u64,
    pub euler_maclaurin_terms: TermCount,
    pub bernoulli_order: usize,
    pub target_abs_error: f64,
    pub panel_width_scale: f64,
    pub panel_points: usize,
    /// Smoothed sums stop at `n ≤ Y · smoothing_multiplier`.
    pub smoothing_multiplier: f64,
}

impl Default for Config {
    fn default() -> Self {
        let eval = EvalSettings::default();
        let scheme = PanelScheme::default();
        Config {
            threads: 1,
            output_dir: PathBuf::from("."),
            divisor_table_size: 1_000_000,
            euler_maclaurin_terms: eval.euler_maclaurin_terms,
            bernoulli_order: eval.bernoulli_order,
            target_abs_error: eval.target_abs_error,
            panel_width_scale: scheme.width_scale,
            panel_points: scheme.points,
            smoothing_multiplier: 40.0,
        }
    }
}

fn positive_int<T: std::str::FromStr + PartialOrd + Default>(
    key: &str,
    value: &str,
) -> Result<T, CliError> {
    match value.parse::<T>() {
        Ok(v) if v > T::default() => Ok(v),
        _ => Err(CliError::usage(format!(
            "config key {key}: expected a positive integer, got {value:?}"
        ))),
    }
}

fn positive_float(key: &str, value: &str) -> Result<f64, CliError> {
    match value.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(CliError::usage(format!(
            "config key {key}: expected a positive number, got {value:?}"
        ))),
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Config::default();
        let mut seen: Vec<String> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::usage(format!("config line {}: expected key = value", i + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            if seen.iter().any(|k| k == key) {
                return Err(CliError::usage(format!("config key {key} given twice")));
            }
            seen.push(key.to_string());
            cfg.set(key, value)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "threads" => self.threads = positive_int(key, value)?,
            "output_dir" => {
                if value.is_empty() {
                    return Err(CliError::usage("config key output_dir is empty"));
                }
                self.output_dir = PathBuf::from(value);
            }
            "divisor_table_size" => self.divisor_table_size = positive_int(key, value)?,
            "euler_maclaurin_terms" => {
                self.euler_maclaurin_terms = if value == "auto" {
                    TermCount::Auto
                } else {
                    TermCount::Fixed(positive_int(key, value)?)
                }
            }
            "bernoulli_order" => self.bernoulli_order = positive_int(key, value)?,
            "target_abs_error" => self.target_abs_error = positive_float(key, value)?,
            "panel_width_scale" => self.panel_width_scale = positive_float(key, value)?,
            "panel_points" => self.panel_points = positive_int(key, value)?,
            "smoothing_multiplier" => self.smoothing_multiplier = positive_float(key, value)?,
            _ => return Err(CliError::usage(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.threads == 0 {
            return Err(CliError::usage("threads must be positive"));
        }
        if self.divisor_table_size > MAX_TABLE_SIZE {
            return Err(CliError::resource(format!(
                "divisor_table_size {} exceeds {MAX_TABLE_SIZE}",
                self.divisor_table_size
            )));
        }
        self.eval_settings()
            .validate()
            .map_err(|e| CliError::usage(e.to_string()))?;
        self.scheme().validate().map_err(CliError::usage)?;
        Ok(())
    }

    /// Explicit path, else `$ZETALAB_CONFIG`, else defaults.
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let path = match path {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CONFIG_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from),
        };
        match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p).map_err(|e| {
                    CliError::usage(format!("cannot read config {}: {e}", p.display()))
                })?;
                Self::parse(&text)
            }
            None => Ok(Config::default()),
        }
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        let terms = match self.euler_maclaurin_terms {
            TermCount::Auto => "auto".to_string(),
            TermCount::Fixed(n) => n.to_string(),
        };
        let _ = writeln!(out, "threads = {}", self.threads);
        let _ = writeln!(out, "output_dir = {}", self.output_dir.display());
        let _ = writeln!(out, "divisor_table_size = {}", self.divisor_table_size);
        let _ = writeln!(out, "euler_maclaurin_terms = {terms}");
        let _ = writeln!(out, "bernoulli_order = {}", self.bernoulli_order);
        let _ = writeln!(out, "target_abs_error = {:e}", self.target_abs_error);
        let _ = writeln!(out, "panel_width_scale = {}", self.panel_width_scale);
        let _ = writeln!(out, "panel_points = {}", self.panel_points);
        let _ = writeln!(out, "smoothing_multiplier = {}", self.smoothing_multiplier);
        out
    }

    pub fn eval_settings(&self) -> EvalSettings {
        EvalSettings {
            euler_maclaurin_terms: self.euler_maclaurin_terms,
            bernoulli_order: self.bernoulli_order,
            target_abs_error: self.target_abs_error,
        }
    }

    pub fn scheme(&self) -> PanelScheme {
        PanelScheme {
            width_scale: self.panel_width_scale,
            points: self.panel_points,
        }
    }

    pub fn execution(&self) -> Execution {
        Execution::with_threads(self.threads)
    }
}
