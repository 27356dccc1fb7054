use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands disagree on shape or on the dimension `n`.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A value lies outside the domain of an operation (bad subset, bad index, bad size).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed text input. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A computation was requested beyond a configured size cap.
    #[error("capacity exceeded: {what} is capped at n = {cap}, got n = {n}")]
    Capacity { what: String, cap: u32, n: u32 },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
