use thiserror::Error;

/// Errors shared across the crate.
///
/// `Invalid*` variants signal bad inputs (rejected before any computation);
/// `ScaleGuard` signals a request that exceeds a documented desk-scale bound
/// and is refused rather than silently truncated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("degenerate simplex: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("scale guard exceeded for {what}: {actual} > {limit}")]
    ScaleGuard {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("every part must be coprime to n-1: gcd({part}, {modulus}) = {gcd}")]
    NotCoprime { part: i64, modulus: i64, gcd: i64 },

    #[error("simplex is not antichain: {0}")]
    NotAntichain(String),

    #[error("coefficient overflow in series arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Euclid's algorithm on non-negative integers, with gcd(x, 0) = x.
pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    debug_assert!(a >= 0 && b >= 0);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
