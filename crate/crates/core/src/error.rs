use thiserror::Error;

use crate::label::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(Label),

    #[error("an element cannot dominate itself (`{0}`)")]
    SameElement(Label),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("`{deleted}` is not dominated by `{witness}`")]
    NotDominated { deleted: Label, witness: Label },

    #[error("certificate rejected at step {step}: {reason}")]
    IllegalStep { step: usize, reason: String },

    #[error("stale certificate: start digest {found} does not match {expected}")]
    StaleCertificate { expected: String, found: String },

    #[error("certificate category `{found}` cannot be replayed against a {expected}")]
    WrongCategory { expected: String, found: String },

    #[error("budget exceeded: more than {limit} {what}")]
    Budget { what: &'static str, limit: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used by the CLI and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownElement(_) => "unknown-element",
            Error::SameElement(_) => "same-element",
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::NotDominated { .. } => "not-dominated",
            Error::IllegalStep { .. } => "illegal-step",
            Error::StaleCertificate { .. } => "stale-certificate",
            Error::WrongCategory { .. } => "wrong-category",
            Error::Budget { .. } => "budget",
            Error::Precondition(_) => "precondition",
            Error::Input(_) => "input",
            Error::Internal(_) => "internal",
        }
    }
}
