//! Fibonacci numbers with `F(0) = 0`, `F(1) = F(2) = 1`.

use crate::error::{MathError, Result};

/// A validated, non-negative Fibonacci index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibIndex(u64);

impl FibIndex {
    /// Negative indices are a domain error; no coefficient formula reaches one
    /// inside its declared index ranges.
    pub fn new(value: i64) -> Result<Self> {
        u64::try_from(value)
            .map(FibIndex)
            .map_err(|_| MathError::NegativeFibIndex(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl From<u32> for FibIndex {
    fn from(value: u32) -> Self {
        FibIndex(value.into())
    }
}

/// Largest index whose value fits in a `u64`.
pub const MAX_FIB_INDEX: u64 = 93;

pub fn fib(k: FibIndex) -> Result<u64> {
    if k.0 > MAX_FIB_INDEX {
        return Err(MathError::FibOverflow(k.0));
    }
    let (mut prev, mut cur) = (0u64, 1u64);
    if k.0 == 0 {
        return Ok(0);
    }
    for _ in 1..k.0 {
        (prev, cur) = (cur, prev + cur);
    }
    Ok(cur)
}

/// `fib` over a signed index, rejecting negatives.
pub fn fib_signed(k: i64) -> Result<u64> {
    fib(FibIndex::new(k)?)
}
