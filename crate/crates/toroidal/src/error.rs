//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by exact-arithmetic, algebra, and module operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is zero")]
    EmptyPolynomial,
    #[error("constant term is zero; strip the monomial factor first")]
    ConstantTermZero,
    #[error("polynomial has negative exponents; strip the monomial factor first")]
    NegativeExponent,
    #[error("multi-index rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("no stored nilpotent basis for algebra `{0}`")]
    BasisSearchFailed(String),
    #[error("module carries no restriction bound")]
    MissingRestrictionBound,
    #[error("operation leaves the valid window of a truncated module (degree {degree} > depth {depth})")]
    NotWithinValidWindow { degree: i64, depth: i64 },
    #[error("module carries no weight data")]
    MissingWeightData,
    #[error("no finite truncation bound can be certified for this series and polynomial")]
    NoTruncationBound,
    #[error("module is not in the required category: {0}")]
    NotInCategory(String),
    #[error("Vandermonde system is singular (points not pairwise distinct)")]
    SingularSystem,
    #[error("window too small: exponent {0} not covered")]
    WindowTooSmall(i64),
    #[error("evaluation point must be nonzero")]
    ZeroPoint,
    #[error("nilpotency order not found within bound {0}")]
    BoundExceeded(usize),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("algebra table failed validation: {0}")]
    InvalidAlgebra(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
