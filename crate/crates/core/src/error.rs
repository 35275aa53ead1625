use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("subtraction would make a count negative")]
    NegativeCount,
    #[error("integrality violation in {context}: {value} is not divisible by {divisor}")]
    Integrality { context: String, value: String, divisor: String },
    #[error("precursor {sequence} exhausted: index {index:?} is outside the provided range")]
    ProviderExhausted { sequence: String, index: Vec<i64> },
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("precursor file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("inconsistent counts: {0}")]
    Inconsistent(String),
    #[error("derived backend rejected: {sequence} differs at {index:?}")]
    ValidationMismatch { sequence: String, index: Vec<i64> },
}
