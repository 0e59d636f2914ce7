use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live in the same ambient dimension do not.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A malformed argument (empty generator set, zero coordinate, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A caller violated a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Exact monomial division without divisibility.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A resource budget (degree, basis size, pair count, enumeration size) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Limit(String),

    /// Input text could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
