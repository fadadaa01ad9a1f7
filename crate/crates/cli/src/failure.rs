use std::fmt;
use std::process::ExitCode;

use chibound::Error;

/// Exit status classes: 2 for unreadable or malformed input, 3 when a search
/// exceeds its size limit, 4 when a run violates a stated precondition or
/// guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Parse = 2,
    Resource = 3,
    Contract = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Parse,
            message: message.into(),
        }
    }

    pub fn contract(message: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Contract,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.kind as u8)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.kind {
            Kind::Parse => "input error",
            Kind::Resource => "resource limit",
            Kind::Contract => "contract violation",
        };
        write!(f, "{label}: {}", self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Resource { .. } => Kind::Resource,
            Error::Disconnected
            | Error::DiversityExceeded { .. }
            | Error::RankExceeded { .. }
            | Error::OracleBudget { .. }
            | Error::OracleImproper { .. }
            | Error::Invariant(_) => Kind::Contract,
            _ => Kind::Parse,
        };
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::parse(e.to_string())
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;
