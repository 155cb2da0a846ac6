use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("not a member of Z[z^2, t^±1]: {0}")]
    NotMember(String),
    #[error("h-series truncation order {0} is insufficient")]
    TruncationInsufficient(usize),
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("non-integral exponent in a final invariant: {0}")]
    NonIntegralExponent(String),
    #[error("invalid link specification: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
