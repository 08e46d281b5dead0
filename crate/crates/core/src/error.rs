use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated a documented bound or hypothesis.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The request is valid but exceeds what the configured budget allows.
    #[error("capability error: {0}")]
    Capability(String),

    /// A walk, cycle vector or similar structure failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    /// A Coxeter move was not applicable at the requested position.
    #[error("move error: {0}")]
    Move(String),

    /// A theorem's conclusion failed on an input satisfying its hypotheses.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// An internal invariant broke; carries a full diagnostic.
    #[error("internal invariant breach: {0}")]
    Internal(String),

    /// Input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
