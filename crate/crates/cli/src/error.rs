use std::process::ExitCode;

use thiserror::Error;
use zetalab::dirichlet_sums::SumError;
use zetalab::exponent_calculus::{CalcError, OBJECTIVE_GRAMMAR};
use zetalab::moment_lab::MomentError;
use zetalab::zeta_engine::ZetaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Usage = 1,
    Empty = 2,
    Domain = 3,
    Resource = 4,
}

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
    /// Extra text printed after the message, e.g. the objective grammar.
    pub detail: Option<&'static str>,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
            detail: None,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Kind::Usage, message)
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Self::new(Kind::Domain, message)
    }

    pub fn resource(message: impl Into<String>) -> Self {
        Self::new(Kind::Resource, message)
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.kind as u8)
    }
}

impl From<CalcError> for CliError {
    fn from(e: CalcError) -> Self {
        let kind = match e {
            CalcError::Parse { .. }
            | CalcError::Nonlinear { .. }
            | CalcError::InvalidWord(_)
            | CalcError::UnknownSeed(_)
            | CalcError::Serialization(_) => Kind::Usage,
            CalcError::EmptyFeasibleSet => Kind::Empty,
            CalcError::Overflow(_) => Kind::Resource,
            CalcError::InvalidPair { .. }
            | CalcError::DivisionByZero { .. }
            | CalcError::HypothesisViolation { .. }
            | CalcError::Domain(_) => Kind::Domain,
        };
        let detail = matches!(e, CalcError::Parse { .. } | CalcError::Nonlinear { .. })
            .then_some(OBJECTIVE_GRAMMAR);
        CliError {
            kind,
            message: e.to_string(),
            detail,
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        let kind = match e {
            ZetaError::TableTooSmall { .. } => Kind::Resource,
            _ => Kind::Domain,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<SumError> for CliError {
    fn from(e: SumError) -> Self {
        let kind = match e {
            SumError::TableTooSmall { .. } | SumError::Resource { .. } => Kind::Resource,
            _ => Kind::Domain,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<MomentError> for CliError {
    fn from(e: MomentError) -> Self {
        match e {
            MomentError::Zeta(z) => z.into(),
            MomentError::Resource(m) => CliError::resource(format!("resource limit: {m}")),
            other => CliError::domain(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::resource(format!("i/o: {e}"))
    }
}
