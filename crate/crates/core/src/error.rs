use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("multi-index has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid exponent {0}")]
    InvalidExponent(f64),
    #[error("form is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("zero vector has no norming vector")]
    ZeroVector,
    #[error("object has zero norm")]
    ZeroObject,
    #[error("operation requires a bilinear form, got m = {0}")]
    NotBilinear(usize),
    #[error("(m = {m}, p = {p}) is outside the supported regime p >= m")]
    Unsupported { m: usize, p: f64 },
    #[error("regime violation: {0}")]
    Regime(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
