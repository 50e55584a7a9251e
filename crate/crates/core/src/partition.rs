//! Positive integer partitions and the lattice simplices they index.
//!
//! A sequence λ = (λ₁, …, λ_d) of positive integers with total n indexes the
//! simplex Δ_λ = conv(e₁, …, e_d, λ) ⊂ R^d, which has the unimodular facet
//! conv(e₁, …, e_d) and normalized volume n − 1. All of the poset machinery
//! in this crate is driven by λ and the modulus n − 1.

use crate::error::{gcd, Error, Result};

/// The documented overflow-safety bound: with n < 2^31 every intermediate
/// product i·λ_t ≤ (n−2)·n stays comfortably inside 64-bit signed range.
pub const MAX_TOTAL: i64 = 1 << 31;

/// A sequence of positive integer parts with total `n`, indexing Δ_λ.
///
/// Parts are kept in the order given. The poset structure depends only on
/// the multiset of parts, but coordinate-level outputs (fundamental
/// parallelepiped points, the Hermite normal form column) follow the stored
/// order, so callers that care about coordinates control it. Partitions
/// produced by [`crate::scan::iter_partitions`] are weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<i64>,
    total: i64,
}

impl Partition {
    /// Validate and wrap a sequence of parts.
    ///
    /// Rejects empty sequences, non-positive parts, and totals at or above
    /// [`MAX_TOTAL`].
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts given".into()));
        }
        if let Some(&bad) = parts.iter().find(|&&p| p < 1) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {bad}"
            )));
        }
        let mut total: i64 = 0;
        for &p in &parts {
            total = total
                .checked_add(p)
                .filter(|&t| t < MAX_TOTAL)
                .ok_or_else(|| {
                    Error::InvalidPartition(format!("total must stay below 2^31 = {MAX_TOTAL}"))
                })?;
        }
        Ok(Self { parts, total })
    }

    /// The parts, in stored order.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// n = Σ λ_t.
    pub fn total(&self) -> i64 {
        self.total
    }

    /// d, the number of parts (the ambient dimension of Δ_λ).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// n − 1, the modulus of all residue arithmetic and the normalized
    /// volume of Δ_λ.
    pub fn modulus(&self) -> i64 {
        self.total - 1
    }

    /// The distinct part values, in first-occurrence order.
    ///
    /// Relation predicates depend only on the distinct values, so residue
    /// tables are deduplicated through this.
    pub fn distinct_parts(&self) -> Vec<i64> {
        let mut seen = Vec::new();
        for &p in &self.parts {
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        seen
    }

    /// Whether every part is coprime to n − 1 (with gcd(x, 0) = x, so the
    /// one-part partition of 1 passes).
    pub fn is_relprime(&self) -> bool {
        let m = self.modulus();
        self.parts.iter().all(|&p| gcd(p, m) == 1)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parse a comma-separated partition literal such as `"8,2"`.
impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part literal {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
