use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: left order {left}, right order {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("integer overflow in tropical arithmetic")]
    Overflow,

    #[error("exponent must be at least {min}, got {got}")]
    BadExponent { min: usize, got: usize },

    #[error("no shift periodicity found with exponents up to {max_exponent}")]
    PeriodicityNotFound { max_exponent: usize },

    #[error("cylinder dimensions out of range: m={m}, n={n} ({reason})")]
    BadDimensions {
        m: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("vertex ({row}, {col}) out of range for P_{m} x C_{n}")]
    VertexOutOfRange {
        row: usize,
        col: usize,
        m: usize,
        n: usize,
    },

    #[error("borders overlap: m={m} is below 13")]
    BordersOverlap { m: usize },

    #[error("not a border-2-dominating set: {0}")]
    NotBorderDominating(String),

    #[error("invalid letter {0:?}: words use the alphabet 0..=3")]
    BadLetter(char),

    #[error("invalid word {0:?}: expected 5 letters")]
    BadWordLength(String),

    #[error("word {0} is not suitable")]
    NotSuitable(String),

    #[error("suitable word count is {found}, expected 111")]
    WordCount { found: usize },

    #[error("invalid closed walk: {0}")]
    InvalidWalk(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
