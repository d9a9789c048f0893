//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("series is under-resolved: needed coefficient at exponent {needed}, known only through {order}")]
    UnderResolved { needed: i64, order: i64 },

    #[error("series has no invertible leading coefficient")]
    NotInvertible,

    #[error("{op} is not representable in exact arithmetic (constant term {detail})")]
    NotRepresentable { op: &'static str, detail: String },

    #[error("precision fault: {0}")]
    PrecisionFault(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("enumeration budget exceeded: {0} cells requested, limit {1}")]
    BudgetExceeded(u128, u128),
}

pub type Result<T> = std::result::Result<T, Error>;
