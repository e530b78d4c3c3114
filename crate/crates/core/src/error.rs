use thiserror::Error;

use crate::incidence::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no such point: {0}")]
    NoSuchPoint(String),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("configuration fails verification: {0}")]
    NotVerified(Violation),
    #[error("axis not a binomial PSTS: {0}")]
    AxisInvalid(String),
    #[error("correlation undefined for n = {0}")]
    CorrelationUndefined(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("criterion requires permutation skew")]
    NotPermutationSkew,
    #[error("i0 not a valid alternate center: {0}")]
    InvalidCenter(String),
    #[error("not a perspective pair from q: {0}")]
    NotPerspectivePair(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("hypotheses violated: {0}")]
    HypothesesViolated(String),
    #[error("unsupported field order {0}")]
    UnsupportedField(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
