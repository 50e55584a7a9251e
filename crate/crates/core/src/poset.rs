//! The fundamental parallelepiped poset P(λ) on the elements {1, …, n−2}.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::partition::Partition;
use crate::relation::{relates_coprime, relates_theorem, ResidueTable};

/// P(λ) with its full relation set and the cover relations (Hasse diagram).
///
/// Elements are the nonzero parallelepiped point indices 1, …, n−2; the zero
/// point sits below everything and is left implicit. `relations` is
/// transitively closed and `covers` is its transitive reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FppPoset {
    n_minus_1: i64,
    relations: BTreeSet<(i64, i64)>,
    covers: BTreeSet<(i64, i64)>,
    is_antichain: bool,
}

impl FppPoset {
    pub(crate) fn from_relations(n_minus_1: i64, relations: BTreeSet<(i64, i64)>) -> Self {
        let covers = transitive_reduction(&relations);
        let is_antichain = relations.is_empty();
        Self {
            n_minus_1,
            relations,
            covers,
            is_antichain,
        }
    }

    /// n − 1 for the underlying λ.
    pub fn n_minus_1(&self) -> i64 {
        self.n_minus_1
    }

    /// The elements 1, …, n−2 (empty when n ≤ 2).
    pub fn elements(&self) -> impl Iterator<Item = i64> {
        1..self.n_minus_1
    }

    /// All ordered pairs (i, j) with i ≺ j.
    pub fn relations(&self) -> &BTreeSet<(i64, i64)> {
        &self.relations
    }

    /// The cover relations: i ≺ j with no element strictly between.
    pub fn covers(&self) -> &BTreeSet<(i64, i64)> {
        &self.covers
    }

    pub fn is_antichain(&self) -> bool {
        self.is_antichain
    }

    /// Elements with nothing below them (the Hilbert basis indices).
    pub fn minimal_elements(&self) -> Vec<i64> {
        self.elements()
            .filter(|&x| !self.relations.iter().any(|&(_, j)| j == x))
            .collect()
    }

    /// Elements with nothing above them.
    pub fn maximal_elements(&self) -> Vec<i64> {
        self.elements()
            .filter(|&x| !self.relations.iter().any(|&(i, _)| i == x))
            .collect()
    }
}

/// Transitive reduction: keep (i, j) unless some k has (i, k) and (k, j).
///
/// Quadratic in the worst case but the posets here are desk-scale.
fn transitive_reduction(relations: &BTreeSet<(i64, i64)>) -> BTreeSet<(i64, i64)> {
    relations
        .iter()
        .filter(|&&(i, j)| {
            !((i + 1)..j).any(|k| relations.contains(&(i, k)) && relations.contains(&(k, j)))
        })
        .copied()
        .collect()
}

/// Build P(λ) by running the residue predicate over every pair.
pub fn build_poset(lambda: &Partition) -> Result<FppPoset> {
    let m = lambda.modulus();
    if m < 2 {
        // At most one parallelepiped point beyond zero: no pairs.
        return Ok(FppPoset::from_relations(m, BTreeSet::new()));
    }
    let res = ResidueTable::new(lambda)?;
    let coprime = res.all_coprime();
    let mut relations = BTreeSet::new();
    for j in 2..=(m - 1) {
        for i in 1..j {
            let related = if coprime {
                relates_coprime(&res, i, j)?
            } else {
                relates_theorem(&res, i, j)?
            };
            if related {
                relations.insert((i, j));
            }
        }
    }
    Ok(FppPoset::from_relations(m, relations))
}

/// Whether x ↦ n−1−x reverses every relation of the poset.
///
/// This is the literal check; for λ satisfying the relatively prime
/// condition it must come back true.
pub fn check_self_dual(poset: &FppPoset) -> bool {
    let m = poset.n_minus_1;
    poset
        .relations
        .iter()
        .all(|&(i, j)| poset.relations.contains(&(m - j, m - i)))
}
