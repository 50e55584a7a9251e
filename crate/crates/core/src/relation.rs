//! Relation predicates for the fundamental parallelepiped poset of Δ_λ.
//!
//! Three interchangeable tests for i ≺ j, in increasing order of speed:
//!
//! * [`relates_lemma`] — the defining additivity check p(i) + p(j−i) = p(j);
//! * [`relates_theorem`] — the residue characterization: writing
//!   i·λ_t = r_{t,i}(n−1) + s_{t,i}, the relation holds iff for every part
//!   value one of three s-conditions does;
//! * [`relates_coprime`] — when every part is coprime to n−1 the residues
//!   never vanish and the test collapses to s_{t,i} > s_{t,j} > 0.

use crate::error::{gcd, Error, Result};
use crate::fpp::point_of;
use crate::partition::Partition;

/// Residue rows s_{t,i} = (i·λ_t) mod (n−1), one row per distinct part value.
///
/// The implicit quotients r_{t,i} = ⌊i·λ_t/(n−1)⌋ are recoverable but never
/// stored. Rows are indexed by i ∈ {0, …, n−2}.
#[derive(Debug, Clone)]
pub struct ResidueTable {
    modulus: i64,
    distinct_parts: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

impl ResidueTable {
    /// Build the table for λ; requires n ≥ 2 so the modulus is positive.
    pub fn new(lambda: &Partition) -> Result<Self> {
        let m = lambda.modulus();
        if m < 1 {
            return Err(Error::Degenerate(format!(
                "n = {} < 2 admits no residue table",
                lambda.total()
            )));
        }
        let distinct_parts = lambda.distinct_parts();
        let rows = distinct_parts
            .iter()
            .map(|&x| (0..m).map(|i| (i * x) % m).collect())
            .collect();
        Ok(Self {
            modulus: m,
            distinct_parts,
            rows,
        })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn distinct_parts(&self) -> &[i64] {
        &self.distinct_parts
    }

    /// s_{t,i} for the t-th distinct part value.
    pub fn residue(&self, t: usize, i: i64) -> i64 {
        self.rows[t][i as usize]
    }

    /// Whether every part value is coprime to the modulus.
    pub fn all_coprime(&self) -> bool {
        self.distinct_parts
            .iter()
            .all(|&x| gcd(x, self.modulus) == 1)
    }

    fn check_pair(&self, i: i64, j: i64) -> Result<()> {
        let hi = self.modulus - 1;
        for idx in [i, j] {
            if idx < 1 || idx > hi {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    lo: 1,
                    hi,
                });
            }
        }
        Ok(())
    }
}

/// i ≺ j tested by the defining additivity p(i) + p(j−i) = p(j).
pub fn relates_lemma(lambda: &Partition, i: i64, j: i64) -> Result<bool> {
    let m = lambda.modulus();
    for idx in [i, j] {
        if idx < 1 || idx > m - 1 {
            return Err(Error::IndexOutOfRange {
                index: idx,
                lo: 1,
                hi: m - 1,
            });
        }
    }
    if i >= j {
        return Ok(false);
    }
    let pi = point_of(lambda, i)?;
    let pd = point_of(lambda, j - i)?;
    let pj = point_of(lambda, j)?;
    Ok(pi.sum(&pd) == pj)
}

/// i ≺ j tested through the residue table.
///
/// For each part value, with s_i = s_{t,i} etc., exactly one of
///   (1) s_i > s_j > 0,
///   (2) s_i = 0 and s_j = s_{j−i},
///   (3) s_j = s_i > 0 and s_{t,j−i} = 0
/// must hold. Agrees with [`relates_lemma`] on all inputs.
pub fn relates_theorem(res: &ResidueTable, i: i64, j: i64) -> Result<bool> {
    res.check_pair(i, j)?;
    if i >= j {
        return Ok(false);
    }
    for row in &res.rows {
        let si = row[i as usize];
        let sj = row[j as usize];
        let sd = row[(j - i) as usize];
        let ok = (si > sj && sj > 0) || (si == 0 && sj == sd) || (sj == si && si > 0 && sd == 0);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// i ≺ j under the relatively prime condition: s_{t,i} > s_{t,j} > 0 for
/// every part value. Errors if some part shares a factor with n−1.
pub fn relates_coprime(res: &ResidueTable, i: i64, j: i64) -> Result<bool> {
    for &x in &res.distinct_parts {
        let g = gcd(x, res.modulus);
        if g != 1 {
            return Err(Error::NotCoprime {
                part: x,
                modulus: res.modulus,
                gcd: g,
            });
        }
    }
    res.check_pair(i, j)?;
    if i >= j {
        return Ok(false);
    }
    Ok(res
        .rows
        .iter()
        .all(|row| row[i as usize] > row[j as usize] && row[j as usize] > 0))
}

/// Whether Δ_λ is an antichain simplex: no pair of nonzero parallelepiped
/// points relates.
///
/// Normalized volume ≤ 1 (n ≤ 2) is antichain by convention. A part equal
/// to 1 forces antichain outright: its residue row is s_{t,i} = i, which is
/// strictly increasing, so no condition of the theorem can hold for i < j.
/// Otherwise scan pairs j ascending, i ascending, early-exiting on the first
/// relation, through the coprime fast path when it applies.
pub fn is_antichain(lambda: &Partition) -> Result<bool> {
    let n = lambda.total();
    if n <= 2 {
        return Ok(true);
    }
    if lambda.parts().contains(&1) {
        return Ok(true);
    }
    let res = ResidueTable::new(lambda)?;
    let coprime = res.all_coprime();
    let hi = lambda.modulus() - 1;
    for j in 2..=hi {
        for i in 1..j {
            let related = if coprime {
                relates_coprime(&res, i, j)?
            } else {
                relates_theorem(&res, i, j)?
            };
            if related {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
