use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pole: Gamma or rising factorial hits a nonpositive integer ({0})")]
    Pole(String),

    #[error("irrational ratio: unpaired Gamma arguments in fractional class {0}")]
    IrrationalRatio(String),

    #[error("truncation order mismatch: {0}")]
    OrderMismatch(String),

    #[error("series constant term must be 1, got {0}")]
    ConstantTerm(String),

    #[error("truncation too small: need {needed}, have {have}")]
    TruncationTooSmall { needed: usize, have: usize },

    #[error("brute-force cap exceeded: {what} is {size}, cap is {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has non-integer entries")]
    NonInteger,

    #[error("prime pool exhausted before reaching the determinant bound")]
    PrimePoolExhausted,

    #[error("vanishing corner minor M(n-1,n-1)")]
    VanishingMinor,

    #[error("zero base raised to negative power {0}")]
    ZeroToNegative(i64),

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),

    #[error("formula catalog: {0}")]
    Catalog(String),

    #[error("unknown formula id {0:?}")]
    UnknownFormula(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
