use thiserror::Error;

/// Errors raised by the exact and numeric evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("cyclotomic element is not rational: {0}")]
    NotRational(String),

    #[error("cannot add values of different pi grading: pi^{left} vs pi^{right}")]
    GradingMismatch { left: u32, right: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("routes disagree for {what}: {left} vs {right}")]
    RouteDisagreement {
        what: String,
        left: String,
        right: String,
    },

    #[error("enumeration of {count} terms exceeds the limit of {limit}")]
    TooLarge { count: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
