//! Fundamental parallelepiped posets of lattice simplices.
//!
//! Every partition λ of n indexes the simplex Δ_λ = conv(e₁, …, e_d, λ),
//! which has one unimodular facet and normalized volume n − 1. The lattice
//! points of its fundamental parallelepiped carry a partial order: σ ≺ μ
//! when μ − σ is again such a point. When that order is empty away from the
//! origin the simplex is *antichain*, and the Poincaré series of the
//! associated semigroup algebra is rational.
//!
//! The crate provides:
//!
//! * [`fpp`] — the p(b) point parameterization and a from-first-principles
//!   enumeration oracle;
//! * [`relation`] / [`poset`] — relation predicates (additivity, residue
//!   characterization, coprime fast path), poset construction, the
//!   antichain test, and the self-duality check;
//! * [`scan`] — streaming partition enumeration and the exhaustive
//!   part/relprime/rpac census;
//! * [`hnf`] — one-column Hermite normal form simplices, conversion from
//!   Δ_λ, exhaustive census, and seeded random sampling of OCH⁺(n, d);
//! * [`families`] — closed-form posets for (n−2, 2), one-distinct-part
//!   grids (with the digit-swap isomorphism), and the two-distinct-part
//!   cone test;
//! * [`poincare`] — the fundamental parallelepiped algebra, truncated
//!   Poincaré series, and exact small-scale Betti numbers.
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads; the only internal
//! parallelism (scans, sampling, censuses) aggregates by commutative sums
//! and is deterministic for any worker count.

pub mod error;
pub mod families;
pub mod fpp;
pub mod hnf;
pub mod partition;
pub mod poincare;
pub mod poset;
pub mod relation;
pub mod scan;

pub use error::{Error, Result};
pub use families::{grid_poset, grid_swap_iso, poset_n22, GridPoset, GridSwapIso, TwoPartConfig};
pub use fpp::{brute_force_fpp, enumerate_fpp, point_of, FppPoint};
pub use hnf::{
    convert_lambda, exhaust_och, hnf_fpp, hnf_is_antichain, hnf_relates, sample_och,
    ExhaustOutcome, HnfFppPoint, OneColumnHnf, SampleOutcome,
};
pub use partition::Partition;
pub use poincare::{
    antichain_series, bar_betti_small, bar_dimensions, full_poincare, lambda_points, BettiTable,
    FpaTable, LatticePoint, TruncatedSeries,
};
pub use poset::{build_poset, check_self_dual, FppPoset};
pub use relation::{is_antichain, relates_coprime, relates_lemma, relates_theorem, ResidueTable};
pub use scan::{is_relprime, iter_partitions, partition_counts, ratios, scan, RatioRow, ScanRow};
