use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series must contain at least one sample")]
    EmptySeries,
    #[error("sample {index} is not a finite number")]
    NonFiniteSample { index: usize },
    #[error("threshold must be a non-negative number or +inf, got {0}")]
    InvalidThreshold(f64),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("envelope radius {envelope} does not match the requested window radius {requested}")]
    WindowMismatch { envelope: usize, requested: usize },
    #[error("invalid cumulative bound: {0}")]
    InvalidCumulativeBound(&'static str),
    #[error("contribution {index} is negative or not finite")]
    InvalidContribution { index: usize },
    #[error("index order is not a permutation of 0..{len}")]
    InvalidOrder { len: usize },
    #[error("window ratio must lie in [0, 1], got {0}")]
    InvalidWindowRatio(f64),
    #[error("query length {query} must be in 1..={reference}")]
    InvalidQueryLength { query: usize, reference: usize },
    #[error("threshold tightening requires lower bounds to be enabled")]
    TighteningWithoutLowerBounds,
}
