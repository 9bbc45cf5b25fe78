use thiserror::Error;

/// Errors produced by ideal, complex and cohomology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} variables requested; at most {max} are supported", max = crate::MAX_VARS)]
    TooManyVariables(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("scan window has {size} lattice points, above the limit of {limit}")]
    WindowTooLarge { size: u128, limit: u128 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
