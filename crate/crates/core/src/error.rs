use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent arguments (arity mismatch, bad shape, parse failure).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Well-formed arguments outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request is well-defined but too large to enumerate.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
