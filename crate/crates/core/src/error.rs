use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero while evaluating a continued fraction")]
    DivisionByZero,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),
    #[error("expected a knot, got {0}")]
    NotAKnot(String),
    #[error("expected a link, got {0}")]
    NotALink(String),
    #[error("the partial order is defined for knots only; {0} is a link")]
    LinkNotOrdered(String),
    #[error("no upper bound exists: {0}")]
    NoUpperBound(String),
    #[error("word does not parse with respect to both tiles")]
    NotADoubleParsing,
    #[error("word cannot be represented as a path in the tile product")]
    NotRepresentable,
    #[error("search budget exhausted before the sweep completed")]
    BudgetExhausted,
    #[error("unsupported output format: {0}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
