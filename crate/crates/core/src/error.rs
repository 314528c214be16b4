use thiserror::Error;

/// Errors raised by the exact-arithmetic and calculus layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("Fibonacci index {0} is negative")]
    NegativeFibIndex(i64),
    #[error("Fibonacci value F({0}) does not fit in 64 bits")]
    FibOverflow(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}

pub type Result<T, E = MathError> = std::result::Result<T, E>;
