use thiserror::Error;

/// Errors reported by the construction, counting, and analysis routines.
///
/// All integer arithmetic in this crate is checked: an out-of-range
/// intermediate is reported as [`Error::Overflow`] rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line was requested with a = b = 0, which describes no line.
    #[error("degenerate line: a and b are both zero")]
    DegenerateLine,

    /// The triple (a, b, c) does not describe a line in integer canonical
    /// form: gcd(|a|, |b|) does not divide c.
    #[error("({a}, {b}, {c}) has no integer canonical form: gcd {g} does not divide {c}")]
    NonIntegralLine { a: i64, b: i64, c: i64, g: i64 },

    /// A checked 64-bit operation overflowed.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// Construction or query parameters failed validation.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The all-lines-through-pairs oracle refused an input beyond its cap.
    #[error("{n} points exceed the all-lines oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn checked_mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn checked_add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn checked_add_u64(a: u64, b: u64, ctx: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn checked_mul_u64(a: u64, b: u64, ctx: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}
