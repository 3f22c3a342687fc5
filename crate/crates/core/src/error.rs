//! Error type shared by the library.

use thiserror::Error;

/// Errors raised by precondition checks and parsers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A substitution is not unimodular where one is required.
    #[error("substitution is not unimodular (det = {0})")]
    NotUnimodular(i64),
    /// A matrix or substitution is not irreducible Pisot where one is required.
    #[error("not an irreducible Pisot substitution")]
    NotPisot,
    /// A digit sequence is not admissible for its algorithm.
    #[error("inadmissible sequence: {0}")]
    Inadmissible(String),
    /// A cone has no strictly feasible point.
    #[error("empty cone")]
    EmptyCone,
    /// A continued-fraction expansion stopped early on a boundary vector.
    #[error("expansion terminated after {0} digits")]
    Truncated(usize),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// A feature outside the supported range.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Filesystem failure.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

/// Library result alias.
pub type Result<T> = std::result::Result<T, Error>;
