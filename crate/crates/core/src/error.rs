use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant onto an exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the input was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Interval bounds could not be separated within the precision budget.
    #[error("precision budget exhausted: {0}")]
    Precision(String),

    /// A mathematical invariant failed on certified data.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
