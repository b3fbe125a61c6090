//! Exact computation and structural analysis of chromatic polynomials of
//! planar triangulation families.
//!
//! The crate is organized in layers:
//!
//! * [`exact`] — arbitrary-precision rationals, the quadratic field Q(√5),
//!   dense polynomials, rational functions, Sturm-sequence real-root
//!   isolation and Aberth–Ehrlich complex root finding.
//! * [`graph`] — simple graphs, family constructors (complete graphs, joins,
//!   bipyramids, triangular-cylinder strips) and planar-triangulation
//!   consistency statistics.
//! * [`chromatic`] — deletion–contraction with clique-separator shortcuts and
//!   memoization, plus a brute-force coloring oracle.
//! * [`families`] — closed structural forms over the λ-basis {q−2, q−3, −1},
//!   the two-parameter coefficient tensors, structural fitting, recursion
//!   synthesis/verification, coefficient constraints, and the generating
//!   function of the cubic-λ family.
//! * [`analysis`] — Tutte-bound ratios and limits, chromatic-zero reports,
//!   the asymptotic zero-locus classifier, and ground-state degeneracy
//!   (W-function) evaluators.

pub mod analysis;
pub mod chromatic;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;

pub use error::{ChromaError, Result};
