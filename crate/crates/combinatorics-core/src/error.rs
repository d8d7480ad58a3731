use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("invalid tabloid: {0}")]
    InvalidTabloid(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("compositions have different totals ({0} vs {1})")]
    Incomparable(usize, usize),
    #[error("sequence entry {value} is not {low} or {high}", high = low + 1)]
    ValueOutOfRange { value: usize, low: usize },
    #[error("sequences have different contents")]
    ContentMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}
