use thiserror::Error;

/// Errors raised by the toolkit's operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: empty generator sets, mismatched ambient dimensions.
    #[error("format error: {0}")]
    Format(String),
    /// The operation needs a zero-dimensional ideal or a specific ambient dimension.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The ideal could not be certified as supported at the origin within the budget.
    #[error("not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    /// A configured computation budget was exhausted.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
