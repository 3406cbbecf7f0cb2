use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero generator")]
    ZeroGenerator,
    #[error("unsupported type/rank: {0}")]
    Unsupported(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("degenerate parameter choice: {0}")]
    DegenerateParameter(String),
    #[error("rank collapse at generic t: expected {expected}, found {found}")]
    RankCollapse { expected: usize, found: usize },
    #[error("limit did not terminate within {0} iterations")]
    NonTermination(usize),
    #[error("matrix is not invertible")]
    Singular,
    #[error("inequality system violated: {0}")]
    Inequality(String),
}

pub type Result<T> = std::result::Result<T, Error>;
