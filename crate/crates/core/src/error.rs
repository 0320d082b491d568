use thiserror::Error;

/// Errors shared by all solver and construction layers.
///
/// Arithmetic is checked 64-bit throughout; any overflow aborts the operation
/// with `Overflow` instead of wrapping silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },
    #[error("search box too small: {0}")]
    BoxTooSmall(String),
    #[error("atom {index} ({label}) is not minimal: length set {lengths:?}")]
    AtomNotMinimal {
        index: usize,
        label: String,
        lengths: Vec<i64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

#[inline]
pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}
