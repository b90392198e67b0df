use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input has the wrong shape (ragged triangle, wrong length, ...).
    #[error("malformed input: {0}")]
    Structural(String),
    /// A label or pattern breaks an ordering inequality; the message names it.
    #[error("inequality violated: {0}")]
    Inequality(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The complement of the all-ones word is the vacuum, not a word.
    #[error("complement of the all-ones word is the vacuum")]
    Vacuum,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no coupling: {0}")]
    NoCoupling(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
