//! One-column Hermite normal form simplices and the sampling experiment.
//!
//! A member of OCH(n, d) is the d-simplex with vertices 0, e₁, …, e_{d−1}
//! and z = (a₁, …, a_{d−1}, n); its normalized volume is n. OCH⁺(n, d)
//! restricts to 1 ≤ a_i ≤ n−1, excluding the obvious lattice pyramids.
//!
//! The parallelepiped points are again indexed by one integer: integrality
//! of the last coordinate forces the coefficient on (1, z) to be b/n, each
//! remaining coordinate is then the ceiling ⌈b·a_i/n⌉, and the apex
//! coefficient absorbs the fractional height. The simplices Δ_λ convert
//! into this family with determinant n−1 and column (λ₂, …, λ_d).

use rayon::iter::{IntoParallelIterator, ParallelIterator};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A one-column (n, d) Hermite normal form simplex.
///
/// `a` holds the d−1 nontrivial column entries. Canonical family members
/// satisfy 0 ≤ a_i < n; an entry equal to n can arise from converting a
/// partition whose first part is 1 and is lattice-equivalent to 0 there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneColumnHnf {
    n: i64,
    a: Vec<i64>,
}

impl OneColumnHnf {
    /// Validate n ≥ 1 and 0 ≤ a_i ≤ n; the dimension is `a.len() + 1`.
    pub fn new(n: i64, a: Vec<i64>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!(
                "determinant must be positive, got {n}"
            )));
        }
        if let Some(&bad) = a.iter().find(|&&x| x < 0 || x > n) {
            return Err(Error::InvalidArgument(format!(
                "column entries must lie in 0..={n}, got {bad}"
            )));
        }
        Ok(Self { n, a })
    }

    /// The determinant (bottom-right diagonal entry), equal to the number of
    /// parallelepiped lattice points.
    pub fn determinant(&self) -> i64 {
        self.n
    }

    /// The dimension d of the simplex.
    pub fn dim(&self) -> usize {
        self.a.len() + 1
    }

    /// The nontrivial column entries a₁, …, a_{d−1}.
    pub fn column(&self) -> &[i64] {
        &self.a
    }

    /// Membership in OCH⁺: every entry in 1..=n−1.
    pub fn in_och_plus(&self) -> bool {
        self.a.iter().all(|&x| 1 <= x && x < self.n)
    }

    /// The parallelepiped points as flat rows `[height, c₁, …, c_{d−1}, b]`,
    /// one per b = 0..n−1.
    fn flat_points(&self) -> Vec<i64> {
        let n = self.n;
        let width = self.dim() + 1;
        let mut rows = Vec::with_capacity((n as usize) * width);
        for b in 0..n {
            let start = rows.len();
            rows.push(0); // height placeholder
            let mut carry = b; // numerator of the fractional parts, times n
            for &ai in &self.a {
                let prod = b * ai;
                rows.push((prod + (n - prod % n) % n) / n);
                carry += (n - prod % n) % n;
            }
            rows.push(b);
            rows[start] = (carry + n - 1) / n; // ⌈carry/n⌉
        }
        rows
    }
}

/// A parallelepiped lattice point of a one-column HNF simplex.
///
/// `coords` are the d ambient coordinates; the last one is the index b
/// itself, which is what makes index arithmetic transfer from the Δ_λ case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnfFppPoint {
    pub b: i64,
    pub height: i64,
    pub coords: Vec<i64>,
}

impl HnfFppPoint {
    /// The full lattice vector (height, coords…).
    pub fn vector(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(1 + self.coords.len());
        v.push(self.height);
        v.extend_from_slice(&self.coords);
        v
    }
}

/// All n parallelepiped points of h, indexed b = 0..n−1.
pub fn hnf_fpp(h: &OneColumnHnf) -> Vec<HnfFppPoint> {
    let width = h.dim() + 1;
    h.flat_points()
        .chunks_exact(width)
        .enumerate()
        .map(|(b, row)| HnfFppPoint {
            b: b as i64,
            height: row[0],
            coords: row[1..].to_vec(),
        })
        .collect()
}

fn row(flat: &[i64], width: usize, b: i64) -> &[i64] {
    &flat[b as usize * width..(b as usize + 1) * width]
}

fn relates_flat(flat: &[i64], width: usize, i: i64, j: i64) -> bool {
    if i >= j {
        return false;
    }
    let pi = row(flat, width, i);
    let pd = row(flat, width, j - i);
    let pj = row(flat, width, j);
    (0..width).all(|t| pi[t] + pd[t] == pj[t])
}

/// Whether point(i) + point(j−i) = point(j) componentwise, i.e. i ≺ j in
/// the parallelepiped poset of h.
pub fn hnf_relates(h: &OneColumnHnf, i: i64, j: i64) -> Result<bool> {
    let hi = h.n - 1;
    for idx in [i, j] {
        if idx < 1 || idx > hi {
            return Err(Error::IndexOutOfRange {
                index: idx,
                lo: 1,
                hi,
            });
        }
    }
    Ok(relates_flat(&h.flat_points(), h.dim() + 1, i, j))
}

fn antichain_flat(flat: &[i64], width: usize, n: i64) -> bool {
    for j in 2..n {
        for i in 1..j {
            if relates_flat(flat, width, i, j) {
                return false;
            }
        }
    }
    true
}

/// Whether no pair of nonzero parallelepiped points of h relates.
pub fn hnf_is_antichain(h: &OneColumnHnf) -> bool {
    antichain_flat(&h.flat_points(), h.dim() + 1, h.n)
}

/// The one-column form of Δ_λ: determinant n−1 and column (λ₂, …, λ_d).
///
/// One-part λ yield the trivial (n−1)×1 form with an empty column. The
/// antichain verdict always matches `is_antichain(λ)`.
pub fn convert_lambda(lambda: &Partition) -> Result<OneColumnHnf> {
    if lambda.total() < 2 {
        return Err(Error::Degenerate(format!(
            "n = {} < 2 has determinant 0",
            lambda.total()
        )));
    }
    OneColumnHnf::new(lambda.modulus(), lambda.parts()[1..].to_vec())
}

// ---------------------------------------------------------------------------
// Seeded sampling of OCH⁺(n, d)
// ---------------------------------------------------------------------------

/// SplitMix64: golden-ratio increment plus the Stafford mix13 finalizer.
/// Small, fast, and fully specified here so sampling runs are reproducible
/// across platforms and worker counts.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from 0..bound by rejection, free of modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = (u64::MAX / bound) * bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// The substream generator for one sample: the sample index is hashed
/// through SplitMix64 and folded into the seed, so sample k's draws do not
/// depend on evaluation order.
fn substream(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::new(seed ^ SplitMix64::new(index).next_u64())
}

/// Result of a sampling run over OCH⁺(n, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOutcome {
    pub samples: u64,
    pub antichain_count: u64,
}

impl SampleOutcome {
    /// The antichain fraction f(n, d).
    pub fn fraction(&self) -> f64 {
        self.antichain_count as f64 / self.samples as f64
    }
}

/// Draw `samples` members of OCH⁺(n, d) (each a_i uniform on 1..=n−1,
/// i.i.d., with replacement) and count the antichain ones.
///
/// Identical seeds give identical outcomes for any worker count: each
/// sample runs on its own derived substream.
pub fn sample_och(n: i64, d: i64, samples: u64, seed: u64) -> Result<SampleOutcome> {
    if n < 3 || d < 3 {
        return Err(Error::InvalidArgument(format!(
            "sampling needs n >= 3 and d >= 3, got n = {n}, d = {d}"
        )));
    }
    if samples < 1 {
        return Err(Error::InvalidArgument("samples must be >= 1".into()));
    }
    let antichain_count = (0..samples)
        .into_par_iter()
        .filter(|&k| {
            let mut rng = substream(seed, k);
            let a: Vec<i64> = (0..d - 1)
                .map(|_| 1 + rng.below((n - 1) as u64) as i64)
                .collect();
            let h = OneColumnHnf { n, a };
            hnf_is_antichain(&h)
        })
        .count() as u64;
    Ok(SampleOutcome {
        samples,
        antichain_count,
    })
}

/// Scale guard for the exhaustive census.
pub const EXHAUST_MAX: u64 = 10_000_000;

/// Result of the exhaustive census of OCH⁺(n, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustOutcome {
    pub total: u64,
    pub antichain: u64,
}

/// |OCH⁺(n, d)| = (n−1)^{d−1}, or None on overflow.
pub fn och_plus_size(n: i64, d: i64) -> Option<u64> {
    let base = (n - 1) as u64;
    let mut size: u64 = 1;
    for _ in 0..d - 1 {
        size = size.checked_mul(base)?;
    }
    Some(size)
}

/// Exact antichain census over all of OCH⁺(n, d).
pub fn exhaust_och(n: i64, d: i64) -> Result<ExhaustOutcome> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "census needs n >= 1 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let total = match och_plus_size(n, d) {
        Some(t) if t <= EXHAUST_MAX => t,
        oversized => {
            return Err(Error::ScaleGuard {
                what: "exhaust_och census size",
                limit: EXHAUST_MAX,
                actual: oversized.unwrap_or(u64::MAX),
            })
        }
    };
    if total == 0 {
        return Ok(ExhaustOutcome {
            total: 0,
            antichain: 0,
        });
    }
    // Odometer over {1..n−1}^{d−1}, split on the leading digit for workers.
    let cols = (d - 1) as usize;
    if cols == 0 {
        let h = OneColumnHnf { n, a: Vec::new() };
        return Ok(ExhaustOutcome {
            total: 1,
            antichain: hnf_is_antichain(&h) as u64,
        });
    }
    let antichain = (1..n)
        .into_par_iter()
        .map(|lead| {
            let mut a = vec![1i64; cols];
            a[0] = lead;
            let mut count = 0u64;
            loop {
                let h = OneColumnHnf { n, a: a.clone() };
                if hnf_is_antichain(&h) {
                    count += 1;
                }
                let mut pos = cols - 1;
                loop {
                    if pos == 0 {
                        return count;
                    }
                    a[pos] += 1;
                    if a[pos] < n {
                        break;
                    }
                    a[pos] = 1;
                    pos -= 1;
                }
            }
        })
        .sum();
    Ok(ExhaustOutcome { total, antichain })
}
