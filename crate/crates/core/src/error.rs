use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error in a group literal or space expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} (at byte {offset})")]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Direct sums involving Q are only supported when the other operand is trivial.
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("integer {value} exceeds the factorization limit of 2^64 - 1")]
    FactorTooLarge { value: String },

    #[error("group order {order} exceeds the oracle cap {cap}")]
    ResourceLimit { order: String, cap: u64 },

    #[error("{what} has {count} entries, above the limit {limit}")]
    TooMany {
        what: &'static str,
        count: String,
        limit: u64,
    },

    #[error("invalid endomorphism matrix: {0}")]
    InvalidEndomorphism(String),

    /// Two independent computations disagreed; always a bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse-error",
            Error::InvalidInput(_) => "invalid-input",
            Error::UnsupportedCombination(_) => "unsupported-combination",
            Error::Unsupported(_) => "unsupported",
            Error::FactorTooLarge { .. } => "factor-too-large",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::TooMany { .. } => "resource-limit",
            Error::InvalidEndomorphism(_) => "invalid-endomorphism",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}
