//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by matrix constructors, transforms and walk checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index ({row},{col}) is out of range for order {order}")]
    IndexOutOfRange { order: u32, row: u32, col: u32 },

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector length {len} is not a power of two")]
    LengthNotPowerOfTwo { len: usize },

    #[error("dense Hadamard order {order} exceeds the materialization ceiling {ceiling}")]
    CeilingExceeded { order: u32, ceiling: u32 },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("sign vector entry {value} at position {index} is not +1 or -1")]
    InvalidSign { index: usize, value: i64 },

    #[error("value does not fit the fixed-width fast path")]
    Overflow,

    #[error("series reciprocal needs a nonzero constant term")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
