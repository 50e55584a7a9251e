//! Lattice points of the fundamental parallelepiped of Δ_λ.
//!
//! The half-open parallelepiped spanned by the cone generators (1, e₁), …,
//! (1, e_d), (1, λ) contains exactly n − 1 lattice points, one per residue
//! class. Integrality of the first coordinate forces the coefficient on
//! (1, λ) to be b/(n−1) for an integer b, and the point indexed by b is
//!
//!   p(b) = (Σ_t ⌈bλ_t/(n−1)⌉ − b, ⌈bλ₁/(n−1)⌉, …, ⌈bλ_d/(n−1)⌉).
//!
//! [`brute_force_fpp`] recovers the same set without any ceiling formula, by
//! scanning the rational candidate grid and keeping the integer points; it is
//! the oracle everything else is checked against.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A lattice point p(b) of the fundamental parallelepiped of Δ_λ.
///
/// `height` is the zeroth coordinate (the coarse grading); `coords` are the
/// remaining d coordinates, aligned with the stored part order of λ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FppPoint {
    pub b: i64,
    pub height: i64,
    pub coords: Vec<i64>,
}

impl FppPoint {
    /// Componentwise sum, height included. The result need not lie in the
    /// parallelepiped; membership is exactly what the relation test checks.
    pub fn sum(&self, other: &FppPoint) -> FppPoint {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        FppPoint {
            b: self.b + other.b,
            height: self.height + other.height,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// The full lattice vector (height, coords…).
    pub fn vector(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(1 + self.coords.len());
        v.push(self.height);
        v.extend_from_slice(&self.coords);
        v
    }
}

fn check_index(b: i64, modulus: i64) -> Result<()> {
    if modulus < 1 {
        return Err(Error::Degenerate(format!(
            "n = {} has no parallelepiped points to index",
            modulus + 1
        )));
    }
    if b < 0 || b > modulus - 1 {
        return Err(Error::IndexOutOfRange {
            index: b,
            lo: 0,
            hi: modulus - 1,
        });
    }
    Ok(())
}

/// ⌈a/b⌉ for b > 0, a ≥ 0.
#[inline]
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0 && a >= 0);
    (a + b - 1) / b
}

/// The unique lattice point p(b) of Π_λ with apex coefficient b/(n−1).
pub fn point_of(lambda: &Partition, b: i64) -> Result<FppPoint> {
    let m = lambda.modulus();
    check_index(b, m)?;
    let coords: Vec<i64> = lambda.parts().iter().map(|&p| ceil_div(b * p, m)).collect();
    let height = coords.iter().sum::<i64>() - b;
    Ok(FppPoint { b, height, coords })
}

/// All n − 1 lattice points p(0), …, p(n−2) of Π_λ.
pub fn enumerate_fpp(lambda: &Partition) -> Result<Vec<FppPoint>> {
    let m = lambda.modulus();
    if m < 1 {
        return Err(Error::Degenerate(format!(
            "n = {} < 2: the parallelepiped holds only the origin's class",
            lambda.total()
        )));
    }
    (0..m).map(|b| point_of(lambda, b)).collect()
}

/// Scale guard for the candidate-grid oracle.
pub const BRUTE_FORCE_MAX_VOLUME: i64 = 500;

/// Enumerate Π_λ ∩ Z^{d+1} from first principles, without Eq-style ceilings.
///
/// Every point of the parallelepiped is A·(b₁/v, …, b_{d+1}/v)ᵀ for the
/// generator matrix A and some integer grid point, v = n−1 being |det A|.
/// Fix the apex coefficient b_{d+1} = b: coordinate t is integral iff
/// b_t + b·λ_t ≡ 0 (mod v), which we solve by scanning all v residues, and
/// the height is kept only when it, too, lands on an integer. Returned
/// sorted by the apex index b.
pub fn brute_force_fpp(lambda: &Partition) -> Result<Vec<FppPoint>> {
    let v = lambda.modulus();
    if v < 1 {
        return Err(Error::Degenerate(format!(
            "n = {} < 2 has an empty candidate grid",
            lambda.total()
        )));
    }
    if v > BRUTE_FORCE_MAX_VOLUME {
        return Err(Error::ScaleGuard {
            what: "brute_force_fpp volume",
            limit: BRUTE_FORCE_MAX_VOLUME as u64,
            actual: v as u64,
        });
    }
    let d = lambda.num_parts();
    let mut points = Vec::with_capacity(v as usize);
    for b in 0..v {
        // Candidate coordinate t is (c + b·λ_t)/v; collect every residue c
        // that makes it an integer.
        let mut choices: Vec<Vec<i64>> = Vec::with_capacity(d);
        for &part in lambda.parts() {
            let sols: Vec<i64> = (0..v).filter(|c| (c + b * part) % v == 0).collect();
            choices.push(sols);
        }
        // Walk the product of the per-coordinate solution sets.
        let mut stack = vec![0usize; d];
        'product: loop {
            let cs: Vec<i64> = (0..d).map(|t| choices[t][stack[t]]).collect();
            let num = cs.iter().sum::<i64>() + b;
            if num % v == 0 {
                let coords: Vec<i64> = cs
                    .iter()
                    .zip(lambda.parts())
                    .map(|(&c, &part)| (c + b * part) / v)
                    .collect();
                points.push(FppPoint {
                    b,
                    height: num / v,
                    coords,
                });
            }
            // Odometer increment over the choice sets.
            for t in (0..d).rev() {
                stack[t] += 1;
                if stack[t] < choices[t].len() {
                    continue 'product;
                }
                stack[t] = 0;
            }
            break;
        }
    }
    points.sort_by_key(|p| p.b);
    Ok(points)
}
