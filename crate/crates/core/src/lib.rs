//! Exact arithmetic for subspace codes over finite fields.
//!
//! The crate builds up from scalar arithmetic in GF(p^m) through dense
//! linear algebra to the objects of random network coding: points of the
//! projective geometry PG(q, n) with the subspace and injection metrics,
//! the right action of the general semilinear group, the classic code
//! constructions (Desarguesian spreads, orbit codes, lifted rank-metric
//! codes), automorphism groups by exhaustive stabilizer search or verified
//! generator closure, and isometry decisions between codes.
//!
//! Everything is exact and deterministic: enumeration orders are fixed,
//! parallel searches merge in stream order, and canonical representatives
//! (reduced row echelon bases) make set comparisons cheap.

pub mod action;
pub mod codes;
pub mod error;
pub mod field;
pub mod isometry;
pub mod linalg;
pub mod space;

pub use action::{
    act, automorphism_group, is_automorphism, is_stabilizer_element, stabilizer_order,
    stabilizer_order_formula, AutMode, AutReport, AutStrategy, GroupClosure, SemilinearMap,
};
pub use codes::{
    analyze, desarguesian_aut_generators, desarguesian_spread, is_spread, lift, orbit_code,
    rank_automorphisms, rank_distance, spread_aut_order_formula, CodeReport, DistanceStats,
    Provenance, RankMetricCode, SubspaceCode,
};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldRef, FieldSpec, Frobenius};
pub use isometry::{
    cyclic_conjugate, fingerprint, isometric, orbit_isometry_transport, Fingerprint, IsometryMode,
    IsometryOutcome, NonIsometry,
};
pub use linalg::gl::{gl_order, GlStream};
pub use linalg::poly::PolyGF;
pub use linalg::rcf::{rational_canonical_form, RcfReport};
pub use linalg::{companion_matrix, MatrixGF, Rref};
pub use space::{Metric, Subspace};

/// Default ceiling for exhaustive searches: GL(4, 3) passes, GL(5, 3) is
/// refused.
pub const DEFAULT_CAP: u64 = 1 << 26;
