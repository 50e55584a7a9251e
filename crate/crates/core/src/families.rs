//! Closed-form poset constructions for partitions with special shapes,
//! each cross-checkable against the generic residue machinery.
//!
//! * λ = (n−2, 2): a two-level poset with an explicit cover pattern.
//! * λ = (x, …, x), v copies: the poset embeds in a rectangular grid minus
//!   two corners, ordered by (r, p) ≺ (r', p') iff p > p' and r' > r; in
//!   particular the roles of x and v can be swapped.
//! * λ = (x, …, x, ax, …, ax) with 3 ≤ a ≤ x: after splitting each index
//!   as i = (n/x)·r_i + (v−1)·p_i + q_i, the relation i ≺ j becomes three
//!   strict integer inequalities on the difference vector (a cone test).

use std::collections::BTreeSet;

use crate::error::{gcd, Error, Result};
use crate::partition::Partition;
use crate::poset::FppPoset;

// ---------------------------------------------------------------------------
// P(n−2, 2)
// ---------------------------------------------------------------------------

/// P(n−2, 2) built from its closed form: minimal elements 1..⌊(n−1)/2⌋,
/// and the maximal element ⌊(n−1)/2⌋+j covering j..⌊(n−1)/2⌋.
pub fn poset_n22(n: i64) -> Result<FppPoset> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the (n-2, 2) family needs n >= 4, got {n}"
        )));
    }
    let mid = (n - 1) / 2;
    let mut relations = BTreeSet::new();
    for j in 1..=(n - 2 - mid) {
        for i in j..=mid {
            relations.insert((i, mid + j));
        }
    }
    Ok(FppPoset::from_relations(n - 1, relations))
}

// ---------------------------------------------------------------------------
// One distinct part: the grid poset
// ---------------------------------------------------------------------------

/// The grid model of P(x, …, x) with v copies: elements are the cells
/// (r, p) of an x × v rectangle minus the corners (0,0) and (x−1, v−1),
/// related by (r, p) ≺ (r', p') iff p > p' and r' > r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoset {
    x: i64,
    v: i64,
}

impl GridPoset {
    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    /// The xv − 2 grid cells, in index order.
    pub fn elements(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity((self.x * self.v - 2) as usize);
        for r in 0..self.x {
            for p in 0..self.v {
                if (r, p) != (0, 0) && (r, p) != (self.x - 1, self.v - 1) {
                    out.push((r, p));
                }
            }
        }
        out
    }

    pub fn contains(&self, (r, p): (i64, i64)) -> bool {
        (0..self.x).contains(&r)
            && (0..self.v).contains(&p)
            && (r, p) != (0, 0)
            && (r, p) != (self.x - 1, self.v - 1)
    }

    /// The grid order relation.
    pub fn relates(&self, lo: (i64, i64), hi: (i64, i64)) -> bool {
        self.contains(lo) && self.contains(hi) && lo.1 > hi.1 && hi.0 > lo.0
    }

    /// All related pairs.
    pub fn relations(&self) -> Vec<((i64, i64), (i64, i64))> {
        let elems = self.elements();
        let mut out = Vec::new();
        for &lo in &elems {
            for &hi in &elems {
                if self.relates(lo, hi) {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// The cell's partition-side index i = r·v + p.
    pub fn index_of(&self, (r, p): (i64, i64)) -> i64 {
        r * self.v + p
    }

    /// The relation set transported through i = r·v + p, for comparison
    /// with `build_poset` on (x, …, x).
    pub fn index_relations(&self) -> BTreeSet<(i64, i64)> {
        self.relations()
            .into_iter()
            .map(|(lo, hi)| (self.index_of(lo), self.index_of(hi)))
            .collect()
    }
}

/// The grid poset for λ = (x, …, x) with v occurrences.
pub fn grid_poset(x: i64, v: i64) -> Result<GridPoset> {
    if x < 1 || v < 1 || x * v < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid poset needs x, v >= 1 with xv >= 2, got x = {x}, v = {v}"
        )));
    }
    Ok(GridPoset { x, v })
}

/// The digit-swap bijection φ(r, p) = (v−1−p, x−1−r) from grid(x, v) to
/// grid(v, x), verified to be an order isomorphism on construction.
#[derive(Debug, Clone)]
pub struct GridSwapIso {
    from: GridPoset,
    to: GridPoset,
}

impl GridSwapIso {
    pub fn apply(&self, (r, p): (i64, i64)) -> (i64, i64) {
        (self.from.v - 1 - p, self.from.x - 1 - r)
    }

    /// The element pairing, in domain index order.
    pub fn pairs(&self) -> Vec<((i64, i64), (i64, i64))> {
        self.from
            .elements()
            .into_iter()
            .map(|e| (e, self.apply(e)))
            .collect()
    }

    pub fn domain(&self) -> &GridPoset {
        &self.from
    }

    pub fn codomain(&self) -> &GridPoset {
        &self.to
    }

    fn verify(&self) -> bool {
        let elems = self.from.elements();
        // Bijection onto the codomain's elements.
        let mut images: Vec<(i64, i64)> = elems.iter().map(|&e| self.apply(e)).collect();
        images.sort();
        images.dedup();
        if images.len() != elems.len() || !images.iter().all(|&e| self.to.contains(e)) {
            return false;
        }
        if images.len() as i64 != self.to.x * self.to.v - 2 {
            return false;
        }
        // Order preserved in both directions.
        elems.iter().all(|&lo| {
            elems.iter().all(|&hi| {
                self.from.relates(lo, hi) == self.to.relates(self.apply(lo), self.apply(hi))
            })
        })
    }
}

/// Build and verify the swap isomorphism grid(x, v) ≅ grid(v, x).
pub fn grid_swap_iso(x: i64, v: i64) -> Result<GridSwapIso> {
    let iso = GridSwapIso {
        from: grid_poset(x, v)?,
        to: grid_poset(v, x)?,
    };
    if !iso.verify() {
        return Err(Error::InvalidArgument(format!(
            "swap map failed verification for x = {x}, v = {v}"
        )));
    }
    Ok(iso)
}

// ---------------------------------------------------------------------------
// Two distinct parts: λ = (x, …, x, ax, …, ax)
// ---------------------------------------------------------------------------

/// Configuration for the two-distinct-part family: λ has ua + v copies of x
/// followed by v − (u + 1) copies of ax, subject to
/// 3 ≤ a ≤ x, 0 ≤ u ≤ a−3, and u+2 ≤ v ≤ min(a−1, a(x−1)/x).
///
/// Construction precomputes, for every i in 0..=n−2, the decomposition
/// i = (n/x)·r_i + (v−1)·p_i + q_i, the value f(i) = a·r_i − (xv−1)·p_i +
/// xa·q_i, and the class k = −⌊f(i)/(n−1)⌋ ∈ {0, 1, 2}.
#[derive(Debug, Clone)]
pub struct TwoPartConfig {
    x: i64,
    a: i64,
    u: i64,
    v: i64,
    n: i64,
    r: Vec<i64>,
    p: Vec<i64>,
    q: Vec<i64>,
    f: Vec<i64>,
    class: Vec<i64>,
}

impl TwoPartConfig {
    pub fn new(x: i64, a: i64, u: i64, v: i64) -> Result<Self> {
        if !(3 <= a && a <= x) {
            return Err(Error::InvalidArgument(format!(
                "need 3 <= a <= x, got a = {a}, x = {x}"
            )));
        }
        if !(0 <= u && u <= a - 3) {
            return Err(Error::InvalidArgument(format!(
                "need 0 <= u <= a-3 = {}, got u = {u}",
                a - 3
            )));
        }
        // The upper bound a(x−1)/x is compared in exact integer arithmetic.
        if !(u + 2 <= v && v < a && v * x <= a * (x - 1)) {
            return Err(Error::InvalidArgument(format!(
                "need u+2 <= v <= min(a-1, a(x-1)/x), got v = {v}"
            )));
        }
        let n = x * ((a + 1) * (v - 1) + 1);
        let m = n - 1;
        let nx = n / x; // (a+1)(v−1) + 1
        let count = (m - 1 + 1) as usize; // indices 0..=n−2
        let mut r = Vec::with_capacity(count);
        let mut p = Vec::with_capacity(count);
        let mut q = Vec::with_capacity(count);
        let mut f = Vec::with_capacity(count);
        let mut class = Vec::with_capacity(count);
        for i in 0..=(n - 2) {
            let ri = i / nx;
            let rem = i % nx;
            let (pi, qi) = if v == 2 {
                (rem, 0)
            } else {
                (rem / (v - 1), rem % (v - 1))
            };
            let fi = a * ri - (x * v - 1) * pi + x * a * qi;
            let ki = -fi.div_euclid(m);
            debug_assert!((0..=2).contains(&ki), "class {ki} out of range");
            r.push(ri);
            p.push(pi);
            q.push(qi);
            f.push(fi);
            class.push(ki);
        }
        Ok(Self {
            x,
            a,
            u,
            v,
            n,
            r,
            p,
            q,
            f,
            class,
        })
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    /// n = |λ| = x[(a+1)(v−1) + 1].
    pub fn total(&self) -> i64 {
        self.n
    }

    /// The expanded partition (x, …, x, ax, …, ax).
    pub fn lambda(&self) -> Partition {
        let mut parts = vec![self.x; (self.u * self.a + self.v) as usize];
        parts.extend(std::iter::repeat_n(
            self.a * self.x,
            (self.v - self.u - 1) as usize,
        ));
        Partition::new(parts).expect("setup bounds give a valid partition")
    }

    /// Whether both x and a are coprime to n−1 (required by the cone test).
    pub fn is_coprime(&self) -> bool {
        gcd(self.x, self.n - 1) == 1 && gcd(self.a, self.n - 1) == 1
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if i < 0 || i > self.n - 2 {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 0,
                hi: self.n - 2,
            });
        }
        Ok(())
    }

    fn require_coprime(&self) -> Result<()> {
        let m = self.n - 1;
        for t in [self.x, self.a] {
            let g = gcd(t, m);
            if g != 1 {
                return Err(Error::NotCoprime {
                    part: t,
                    modulus: m,
                    gcd: g,
                });
            }
        }
        Ok(())
    }

    /// The unique decomposition i = (n/x)·r_i + (v−1)·p_i + q_i.
    pub fn decompose(&self, i: i64) -> Result<(i64, i64, i64)> {
        self.check_index(i)?;
        let i = i as usize;
        Ok((self.r[i], self.p[i], self.q[i]))
    }

    /// s_{1,i} = r_i + x[(v−1)p_i + q_i], the residue of i·x mod n−1.
    pub fn s1(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        let i = i as usize;
        Ok(self.r[i] + self.x * ((self.v - 1) * self.p[i] + self.q[i]))
    }

    /// s_{2,i} = f(i) + k(n−1), the residue of i·ax mod n−1.
    pub fn s2(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        let i = i as usize;
        Ok(self.f[i] + self.class[i] * (self.n - 1))
    }

    /// f(i) = a·r_i − (xv−1)·p_i + xa·q_i.
    pub fn f_value(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.f[i as usize])
    }

    /// The class k with i ∈ F_k; always 0, 1, or 2.
    pub fn class_of(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.class[i as usize])
    }

    /// i ≺ j via the cone test: with ℓ = class(j) − class(i) and
    /// Δ = (p_j−p_i, q_j−q_i, r_j−r_i),
    ///
    ///   (xv−1)Δp − ax·Δq − a·Δr > ℓ(n−1),  (1−v)Δp − Δq > 0,  Δr > 0,
    ///
    /// all strict. Requires the coprimality precondition.
    pub fn relates(&self, i: i64, j: i64) -> Result<bool> {
        self.require_coprime()?;
        for idx in [i, j] {
            if idx < 1 || idx > self.n - 2 {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    lo: 1,
                    hi: self.n - 2,
                });
            }
        }
        let (i, j) = (i as usize, j as usize);
        let ell = self.class[j] - self.class[i];
        let dp = self.p[j] - self.p[i];
        let dq = self.q[j] - self.q[i];
        let dr = self.r[j] - self.r[i];
        Ok(
            (self.x * self.v - 1) * dp - self.a * self.x * dq - self.a * dr
                > ell * (self.n - 1)
                && (1 - self.v) * dp - dq > 0
                && dr > 0,
        )
    }

    /// All related pairs by the cone test.
    pub fn relations(&self) -> Result<BTreeSet<(i64, i64)>> {
        let mut out = BTreeSet::new();
        for j in 2..=(self.n - 2) {
            for i in 1..j {
                if self.relates(i, j)? {
                    out.insert((i, j));
                }
            }
        }
        Ok(out)
    }

    /// The v = 2 symmetry identities, checked for every i in 1..=n−2:
    /// r_i + r_{n−1−i} = x−1, p_i + p_{n−1−i} = a+1, and (when x and a are
    /// coprime to n−1) class(i) + class(n−1−i) = 2.
    pub fn v2_checks(&self) -> Result<bool> {
        if self.v != 2 {
            return Err(Error::InvalidArgument(format!(
                "the symmetry identities are for v = 2, got v = {}",
                self.v
            )));
        }
        let m = (self.n - 1) as usize;
        let coprime = self.is_coprime();
        for i in 1..=(self.n - 2) as usize {
            let dual = m - i;
            if self.r[i] + self.r[dual] != self.x - 1 {
                return Ok(false);
            }
            if self.p[i] + self.p[dual] != self.a + 1 {
                return Ok(false);
            }
            if coprime && self.class[i] + self.class[dual] != 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;
    use crate::relation::{relates_theorem, ResidueTable};

    #[test]
    fn n22_examples() {
        let poset = poset_n22(10).unwrap();
        assert!(poset.covers().contains(&(1, 5)));
        assert!(poset.covers().contains(&(4, 8)));
        assert!(!poset.covers().contains(&(1, 8)));
        assert_eq!(poset_n22(4).unwrap().covers().len(), 1);
        let p5 = poset_n22(5).unwrap();
        assert_eq!(p5.minimal_elements(), vec![1, 2]);
        assert_eq!(p5.maximal_elements(), vec![3]);
        assert!(poset_n22(3).is_err());
    }

    #[test]
    fn n22_matches_generic_poset() {
        for n in 4..=24 {
            let direct = poset_n22(n).unwrap();
            let generic = build_poset(&Partition::new(vec![n - 2, 2]).unwrap()).unwrap();
            assert_eq!(direct, generic, "n = {n}");
        }
    }

    #[test]
    fn grid_examples() {
        let g = grid_poset(4, 6).unwrap();
        assert_eq!(g.elements().len(), 22);
        let g = grid_poset(2, 2).unwrap();
        assert_eq!(g.elements(), vec![(0, 1), (1, 0)]);
        assert_eq!(g.relations(), vec![((0, 1), (1, 0))]);
        let g = grid_poset(1, 2).unwrap();
        assert!(g.elements().is_empty());
        assert!(grid_poset(1, 1).is_err());
    }

    #[test]
    fn grid_matches_generic_poset() {
        for (x, v) in [(4, 6), (2, 2), (3, 4), (5, 3), (2, 7)] {
            let g = grid_poset(x, v).unwrap();
            let lambda = Partition::new(vec![x; v as usize]).unwrap();
            let generic = build_poset(&lambda).unwrap();
            assert_eq!(
                &g.index_relations(),
                generic.relations(),
                "x = {x}, v = {v}"
            );
        }
    }

    #[test]
    fn one_distinct_part_antichain_criterion() {
        // The grid has a relation iff x >= 2 and v >= 2 (the cells (0,1)
        // and (1,0) relate), so repeated parts never give an antichain.
        use crate::relation::is_antichain;
        for x in 1..=30i64 {
            for v in 1..=30i64 {
                if x * v < 2 || x * v > 30 {
                    continue;
                }
                let has_relation = !grid_poset(x, v).unwrap().relations().is_empty();
                assert_eq!(has_relation, x >= 2 && v >= 2, "x = {x}, v = {v}");
                let lambda = Partition::new(vec![x; v as usize]).unwrap();
                assert_eq!(is_antichain(&lambda).unwrap(), !has_relation);
            }
        }
    }

    #[test]
    fn swap_iso_examples() {
        let iso = grid_swap_iso(4, 6).unwrap();
        assert_eq!(
            iso.domain().relations().len(),
            iso.codomain().relations().len()
        );
        let iso = grid_swap_iso(2, 2).unwrap();
        assert_eq!(iso.apply((0, 1)), (0, 1));
        assert_eq!(iso.apply((1, 0)), (1, 0));
        // Both (x, 1) grids are relation-free.
        let iso = grid_swap_iso(5, 1).unwrap();
        assert!(iso.domain().relations().is_empty());
        assert!(iso.codomain().relations().is_empty());
    }

    #[test]
    fn two_part_setup_validation() {
        assert!(TwoPartConfig::new(3, 2, 0, 2).is_err()); // a < 3
        assert!(TwoPartConfig::new(3, 4, 0, 2).is_err()); // a > x
        assert!(TwoPartConfig::new(3, 3, 1, 2).is_err()); // u > a−3
        assert!(TwoPartConfig::new(3, 3, 0, 3).is_err()); // v > a−1
        assert!(TwoPartConfig::new(4, 4, 0, 4).is_err()); // v·x > a(x−1)
        let cfg = TwoPartConfig::new(3, 3, 0, 2).unwrap();
        assert_eq!(cfg.total(), 15);
        assert_eq!(cfg.lambda().parts(), &[3, 3, 9]);
    }

    #[test]
    fn two_part_decomposition_examples() {
        let cfg = TwoPartConfig::new(3, 3, 0, 2).unwrap();
        assert_eq!(cfg.decompose(9).unwrap(), (1, 4, 0));
        assert_eq!(cfg.decompose(0).unwrap(), (0, 0, 0));
        assert_eq!(cfg.decompose(10).unwrap(), (2, 0, 0));
        assert!(cfg.decompose(14).is_err());
    }

    #[test]
    fn two_part_residue_reconstruction() {
        let cfg = TwoPartConfig::new(3, 3, 0, 2).unwrap();
        assert_eq!(cfg.f_value(9).unwrap(), -17);
        assert_eq!(cfg.class_of(9).unwrap(), 2);
        assert_eq!(cfg.s2(9).unwrap(), 11); // (9·9) mod 14
        assert_eq!(cfg.f_value(5).unwrap(), 3);
        assert_eq!(cfg.class_of(5).unwrap(), 0);
        assert_eq!(cfg.s1(0).unwrap(), 0);
        assert_eq!(cfg.f_value(0).unwrap(), 0);
        assert_eq!(cfg.class_of(0).unwrap(), 0);
        // Against the direct residues, for every index.
        let m = cfg.total() - 1;
        for i in 0..=(cfg.total() - 2) {
            assert_eq!(cfg.s1(i).unwrap(), (i * cfg.x()) % m);
            assert_eq!(cfg.s2(i).unwrap(), (i * cfg.a() * cfg.x()) % m);
        }
    }

    #[test]
    fn two_part_relates_examples() {
        let cfg = TwoPartConfig::new(3, 3, 0, 2).unwrap();
        assert!(cfg.relates(1, 5).unwrap());
        assert!(!cfg.relates(1, 2).unwrap());
        assert!(cfg.relates(9, 12).unwrap());
    }

    #[test]
    fn two_part_matches_residue_predicate() {
        for (x, a, u, v) in [(3, 3, 0, 2), (4, 3, 0, 2), (4, 4, 0, 2)] {
            let cfg = TwoPartConfig::new(x, a, u, v).unwrap();
            assert!(cfg.is_coprime());
            let lambda = cfg.lambda();
            let res = ResidueTable::new(&lambda).unwrap();
            for j in 1..=(cfg.total() - 2) {
                for i in 1..=(cfg.total() - 2) {
                    assert_eq!(
                        cfg.relates(i, j).unwrap(),
                        relates_theorem(&res, i, j).unwrap(),
                        "cfg ({x},{a},{u},{v}) pair ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn two_part_refuses_relations_without_coprimality() {
        // x = 5, a = 3 gives n−1 = 24, sharing a factor with a.
        let cfg = TwoPartConfig::new(5, 3, 0, 2).unwrap();
        assert!(!cfg.is_coprime());
        assert!(matches!(
            cfg.relates(1, 2),
            Err(Error::NotCoprime { .. })
        ));
        // The decomposition itself is still served.
        assert!(cfg.decompose(7).is_ok());
        let m = cfg.total() - 1;
        for i in 0..=(cfg.total() - 2) {
            assert_eq!(cfg.s1(i).unwrap(), (i * 5) % m);
            assert_eq!(cfg.s2(i).unwrap(), (i * 15) % m);
        }
    }

    #[test]
    fn v2_symmetries() {
        for (x, a) in [(3, 3), (4, 3), (4, 4), (5, 4), (6, 5)] {
            let cfg = TwoPartConfig::new(x, a, 0, 2).unwrap();
            assert!(cfg.v2_checks().unwrap(), "x = {x}, a = {a}");
        }
        let cfg = TwoPartConfig::new(4, 4, 0, 3).unwrap();
        assert!(cfg.v2_checks().is_err());
    }

    #[test]
    fn class_cover_is_three_valued() {
        for (x, a, u, v) in [(3, 3, 0, 2), (4, 4, 0, 3), (4, 4, 1, 3), (5, 4, 0, 3)] {
            let cfg = TwoPartConfig::new(x, a, u, v).unwrap();
            for i in 0..=(cfg.total() - 2) {
                let k = cfg.class_of(i).unwrap();
                assert!((0..=2).contains(&k));
            }
        }
    }
}
