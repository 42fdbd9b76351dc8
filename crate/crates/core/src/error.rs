use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid chain: {0}")]
    Chain(String),
    #[error("invalid tableau: {0}")]
    Tableau(String),
    #[error("local rule violated: {0}")]
    Rule(String),
    #[error("invalid filling: {0}")]
    Filling(String),
    #[error("not a moon polyomino: {0}")]
    Polyomino(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search cap exceeded: {0}")]
    Cap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
