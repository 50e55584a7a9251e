//! Streaming partition enumeration and the exhaustive antichain scan.
//!
//! For each n the scan reports three counts: part(n), the number of
//! partitions of n; relprime(n), those whose every part is coprime to n−1;
//! and rpac(n), the relprime partitions whose simplex Δ_λ is antichain.
//!
//! Partitions stream in reverse-lexicographic order from a constant-size
//! state machine, so n = 73 never materializes its 6.2M partitions. Work is
//! dealt to workers in flat chunks; the aggregation is plain addition, so
//! the result is identical for any worker count.

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::error::{gcd, Error, Result};
use crate::partition::Partition;

/// Counts for one scan row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRow {
    pub n: i64,
    pub part: u64,
    pub relprime: u64,
    pub rpac: u64,
}

/// Largest n the scan has been validated against. Larger inputs work but
/// take correspondingly longer; callers surface a warning.
pub const SCAN_TESTED_MAX: i64 = 73;

// ---------------------------------------------------------------------------
// Reverse-lexicographic partition streaming
// ---------------------------------------------------------------------------

/// Constant-size-state generator for the partitions of n, largest part
/// first, in reverse-lexicographic order: (4), (3,1), (2,2), (2,1,1),
/// (1,1,1,1).
///
/// This is the classic descending-composition scheme: `x[1..=m]` holds the
/// current partition, `h` the position of the last part exceeding 1.
struct RawPartitions {
    x: Vec<i64>,
    m: usize,
    h: usize,
    state: GenState,
}

#[derive(PartialEq)]
enum GenState {
    Fresh,
    Running,
    Done,
}

impl RawPartitions {
    fn new(n: i64) -> Self {
        // Index 0 is unused so the classic 1-based update reads directly.
        let mut x = vec![1i64; n as usize + 1];
        x[1] = n;
        Self {
            x,
            m: 1,
            h: 1,
            state: GenState::Fresh,
        }
    }

    fn next_parts(&mut self) -> Option<&[i64]> {
        match self.state {
            GenState::Fresh => {
                self.state = GenState::Running;
            }
            GenState::Running => {
                if self.x[1] == 1 {
                    self.state = GenState::Done;
                    return None;
                }
                if self.x[self.h] == 2 {
                    self.m += 1;
                    self.x[self.h] = 1;
                    self.h -= 1;
                } else {
                    let r = self.x[self.h] - 1;
                    let mut t = (self.m - self.h + 1) as i64;
                    self.x[self.h] = r;
                    while t >= r {
                        self.h += 1;
                        self.x[self.h] = r;
                        t -= r;
                    }
                    if t == 0 {
                        self.m = self.h;
                    } else {
                        self.m = self.h + 1;
                        if t > 1 {
                            self.h += 1;
                            self.x[self.h] = t;
                        } else {
                            self.x[self.m] = 1;
                        }
                    }
                }
            }
            GenState::Done => return None,
        }
        Some(&self.x[1..=self.m])
    }
}

/// Iterator over the partitions of n in reverse-lexicographic order.
pub struct Partitions {
    raw: RawPartitions,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.raw
            .next_parts()
            .map(|p| Partition::new(p.to_vec()).expect("generator yields valid partitions"))
    }
}

/// Stream every partition of n exactly once, weakly decreasing, in
/// reverse-lexicographic order, holding O(n) state.
pub fn iter_partitions(n: i64) -> Result<Partitions> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "partitions are enumerated for n >= 1, got {n}"
        )));
    }
    Ok(Partitions {
        raw: RawPartitions::new(n),
    })
}

/// Whether every part of λ is coprime to n − 1.
pub fn is_relprime(lambda: &Partition) -> bool {
    lambda.is_relprime()
}

// ---------------------------------------------------------------------------
// The scan kernel
// ---------------------------------------------------------------------------

/// Shared per-n context: a coprimality table and one residue row per part
/// value coprime to m. Relation tests depend only on part values, so every
/// partition of n indexes into the same rows.
struct ScanCtx {
    n: i64,
    m: i64,
    coprime: Vec<bool>,
    rows: Vec<Option<Vec<u32>>>,
}

impl ScanCtx {
    fn new(n: i64) -> Self {
        let m = n - 1;
        let coprime: Vec<bool> = (0..=n).map(|x| gcd(x, m) == 1).collect();
        let rows = (0..=n)
            .map(|x| {
                if x >= 2 && coprime[x as usize] && m >= 2 {
                    Some((0..m).map(|i| ((i * x) % m) as u32).collect())
                } else {
                    None
                }
            })
            .collect();
        Self {
            n,
            m,
            coprime,
            rows,
        }
    }

    /// Counts (1, relprime?, rpac?) for a single weakly decreasing partition.
    fn classify(&self, parts: &[i64], distinct: &mut Vec<usize>) -> (u64, u64) {
        distinct.clear();
        let mut prev = 0i64;
        for &p in parts {
            if p != prev {
                if !self.coprime[p as usize] {
                    return (0, 0);
                }
                distinct.push(p as usize);
                prev = p;
            }
        }
        (1, self.antichain(parts, distinct) as u64)
    }

    fn antichain(&self, parts: &[i64], distinct: &[usize]) -> bool {
        // Volume n−1 ≤ 1 is antichain by convention.
        if self.n <= 2 {
            return true;
        }
        // A part equal to one has the strictly increasing residue row
        // s_i = i, which kills every candidate relation.
        if *parts.last().expect("nonempty") == 1 {
            return true;
        }
        if distinct.len() == 1 {
            // Single part value x >= 2: for a lone part the row is again
            // s_i = i (antichain); with multiplicity the pair (1, v) always
            // relates via s_1 = x > s_v = 1.
            return parts.len() == 1;
        }
        // Every part is coprime to m here, so the relation criterion is
        // s_{t,i} > s_{t,j} for every distinct value t; scan j ascending,
        // i ascending, and stop at the first relation.
        let rows: Vec<&[u32]> = distinct
            .iter()
            .map(|&x| self.rows[x].as_deref().expect("coprime row built"))
            .collect();
        let (first, rest) = rows.split_first().expect("at least two rows");
        let hi = self.m as usize - 1;
        for j in 2..=hi {
            for i in 1..j {
                if first[i] > first[j] && rest.iter().all(|r| r[i] > r[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Partitions of n packed into flat `[len, parts..]*` chunks for dealing to
/// workers.
struct ChunkedPartitions {
    raw: RawPartitions,
    chunk_parts: usize,
}

impl Iterator for ChunkedPartitions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let mut buf = Vec::with_capacity(self.chunk_parts + 64);
        for _ in 0..self.chunk_parts {
            match self.raw.next_parts() {
                Some(parts) => {
                    buf.push(parts.len() as i64);
                    buf.extend_from_slice(parts);
                }
                None => break,
            }
        }
        if buf.is_empty() {
            None
        } else {
            Some(buf)
        }
    }
}

fn scan_chunk(ctx: &ScanCtx, chunk: &[i64]) -> (u64, u64, u64) {
    let mut part = 0;
    let mut relprime = 0;
    let mut rpac = 0;
    let mut distinct = Vec::with_capacity(16);
    let mut pos = 0usize;
    while pos < chunk.len() {
        let len = chunk[pos] as usize;
        let parts = &chunk[pos + 1..pos + 1 + len];
        pos += 1 + len;
        part += 1;
        let (rp, ac) = ctx.classify(parts, &mut distinct);
        relprime += rp;
        rpac += ac;
    }
    (part, relprime, rpac)
}

/// Exact counts (part, relprime, rpac) for all partitions of n.
///
/// `workers = 0` uses all available cores. The result is independent of the
/// worker count: chunks are risk-free to reorder because the aggregation is
/// commutative addition.
pub fn scan(n: i64, workers: usize) -> Result<ScanRow> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "scan needs n >= 1, got {n}"
        )));
    }
    let ctx = ScanCtx::new(n);
    let chunks = ChunkedPartitions {
        raw: RawPartitions::new(n),
        chunk_parts: 4096,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    let (part, relprime, rpac) = pool.install(|| {
        chunks
            .par_bridge()
            .map(|chunk| scan_chunk(&ctx, &chunk))
            .reduce(
                || (0, 0, 0),
                |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2),
            )
    });
    Ok(ScanRow {
        n,
        part,
        relprime,
        rpac,
    })
}

// ---------------------------------------------------------------------------
// Ratios and the independent part(n) cross-check
// ---------------------------------------------------------------------------

/// The two figure ratios for a scan row, rendered with six decimal digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub n: i64,
    /// relprime(n)/part(n); `None` when the denominator vanishes.
    pub relprime_over_part: Option<String>,
    /// rpac(n)/relprime(n); `None` when the denominator vanishes.
    pub rpac_over_relprime: Option<String>,
}

/// Render num/den rounded half-up to six decimal digits, exactly.
fn decimal6(num: u64, den: u64) -> Option<String> {
    if den == 0 {
        return None;
    }
    let micros = (num as u128 * 1_000_000 + den as u128 / 2) / den as u128;
    Some(format!("{}.{:06}", micros / 1_000_000, micros % 1_000_000))
}

/// The figure ratios for a sequence of scan rows.
pub fn ratios(rows: &[ScanRow]) -> Vec<RatioRow> {
    rows.iter()
        .map(|r| RatioRow {
            n: r.n,
            relprime_over_part: decimal6(r.relprime, r.part),
            rpac_over_relprime: decimal6(r.rpac, r.relprime),
        })
        .collect()
}

/// part(0..=max_n) by the pentagonal-number recurrence
/// p(n) = Σ_k (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)].
///
/// Independent of the streaming generator; used as a cross-check.
pub fn partition_counts(max_n: usize) -> Vec<u64> {
    let mut p = vec![0i128; max_n + 1];
    p[0] = 1;
    for n in 1..=max_n {
        let mut total: i128 = 0;
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            if g2 <= n {
                total += sign * p[n - g2];
            }
            k += 1;
        }
        p[n] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}
