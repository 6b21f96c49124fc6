use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("contradictory structure constant c_{i}{j}{k}: {existing} vs {given}")]
    Contradiction {
        i: usize,
        j: usize,
        k: usize,
        existing: String,
        given: String,
    },
    #[error("Cayley-Dickson level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("coefficient count {len} is not 2^{level}")]
    BadCoefficientCount { level: u32, len: usize },
    #[error("element has nonzero unit coordinate {0}")]
    NotImaginary(String),
    #[error("invalid Cayley-Dickson level {0} (supported: 0..=4)")]
    UnsupportedLevel(u32),
    #[error("malformed input: {0}")]
    Schema(String),
}
