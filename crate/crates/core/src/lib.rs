//! Exact machinery for systems of general position representatives.
//!
//! Given a family `X_1, ..., X_m` of finite point multisets in rational
//! `d`-space, the crate decides whether one point can be picked from every
//! set so that the picked points are in general position, and constructs
//! such a choice when it exists. Alongside the solvers it carries the
//! simplicial apparatus used to reason about the problem: independence and
//! general position complexes, stars, neighborhood complexes, completions,
//! nerves, the q-star predicate and a rational homology engine.
//!
//! All arithmetic is exact. Coordinates are arbitrary-precision rationals
//! and every predicate reduces to integer rank computations.
//!
//! "Connectivity" throughout the crate means *homological* connectivity
//! over the rationals: a complex is reported k-connected when it is
//! non-empty and its reduced Betti numbers vanish up to degree k. This is
//! weaker than topological k-connectivity for k >= 1 (the fundamental group
//! is never inspected).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod complex;
mod error;
pub mod exactgeom;
pub mod homology;
mod linalg;
pub mod matroid;
pub mod solver;

pub use complex::{Face, LabeledFamily, QStarReport, SimplicialComplex};
pub use error::{Error, Result};
pub use exactgeom::{Hyperplane, Point, PointMultiset};
pub use homology::{BettiProfile, HomologyOptions};
pub use matroid::{AffineMatroid, Matroid, PartitionMatroid, UniformMatroid};
pub use solver::{PointFamily, SgprResult, SgprStatus};
