//! Systems of general position representatives: bound formulas, condition
//! checking, the three solvers, the construction of families that satisfy
//! the Hall-type condition yet have no representatives, and the builders
//! for the independence and general position complexes of a point set.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::exactgeom::{self, Point, PointMultiset};
use crate::{Error, Result};

mod bounds;
mod builders;
mod condition;
mod counterexample;
mod exhaustive;
mod greedy;
mod intersection;

pub use bounds::{
    binomial, bound_a, bound_b, bound_f_upper, bound_g_upper, bound_h_upper, BoundRow, BoundTable,
};
pub use builders::{
    colorful_blocks, general_position_complex, general_position_complex_with_budget,
    independence_complex, independence_complex_with_budget, solve_colorful,
};
pub use condition::{
    check_condition, ConditionMode, ConditionReport, SubsetVerdict, MAX_EXHAUSTIVE_SETS,
};
pub use counterexample::{counterexample_family, COUNTEREXAMPLE_ATTEMPTS};
pub use exhaustive::{solve_exhaustive, DEFAULT_NODE_BUDGET};
pub use greedy::{solve_greedy, solve_greedy_with, GreedyOptions};
pub use intersection::solve_matroid_intersection;

/// A family `X_1, ..., X_m` of point multisets in a shared dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFamily {
    dim: usize,
    sets: Vec<PointMultiset>,
}

impl PointFamily {
    pub fn new(dim: usize, sets: Vec<PointMultiset>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(s) = sets.iter().find(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: s.dim(),
            });
        }
        Ok(PointFamily { dim, sets })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integer_sets(dim: usize, sets: &[&[&[i64]]]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|s| PointMultiset::new(dim, s.iter().map(|c| Point::from_integers(c)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, sets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sets(&self) -> &[PointMultiset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Multiset union of the listed sets.
    pub fn union_of<I: IntoIterator<Item = usize>>(&self, indices: I) -> PointMultiset {
        let points = indices
            .into_iter()
            .flat_map(|i| self.sets[i].points().iter().cloned())
            .collect();
        PointMultiset::new(self.dim, points).expect("sets share the family dimension")
    }

    /// The disjoint union `X_1 ⊔ ... ⊔ X_m` with, for every element, its
    /// `(set, index within set)` origin.
    pub fn disjoint_union(&self) -> (PointMultiset, Vec<(usize, usize)>) {
        let origin = self
            .sets
            .iter()
            .enumerate()
            .flat_map(|(i, s)| (0..s.len()).map(move |j| (i, j)))
            .collect();
        (self.union_of(0..self.len()), origin)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SgprStatus {
    Found,
    NotFound,
    ConditionViolated,
}

/// One chosen point: entry `index` of set `set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub set: usize,
    pub index: usize,
    pub point: Point,
}

/// A subset of the family together with a φ value that fell short of the
/// required bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub subset: Vec<usize>,
    pub phi: usize,
    pub required: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgprResult {
    pub status: SgprStatus,
    /// One entry per set, ordered by set index, when `status` is `Found`.
    pub representatives: Vec<Representative>,
    pub violation: Option<Violation>,
}

impl SgprResult {
    pub(crate) fn found(family: &PointFamily, mut picks: Vec<(usize, usize)>) -> Self {
        picks.sort_unstable();
        let representatives = picks
            .into_iter()
            .map(|(set, index)| Representative {
                set,
                index,
                point: family.sets[set].points()[index].clone(),
            })
            .collect();
        SgprResult {
            status: SgprStatus::Found,
            representatives,
            violation: None,
        }
    }

    pub(crate) fn not_found() -> Self {
        SgprResult {
            status: SgprStatus::NotFound,
            representatives: Vec::new(),
            violation: None,
        }
    }

    pub(crate) fn violated(violation: Violation) -> Self {
        SgprResult {
            status: SgprStatus::ConditionViolated,
            representatives: Vec::new(),
            violation: Some(violation),
        }
    }

    pub fn is_found(&self) -> bool {
        self.status == SgprStatus::Found
    }

    pub fn points(&self) -> Vec<Point> {
        self.representatives
            .iter()
            .map(|r| r.point.clone())
            .collect()
    }

    /// Independent check of a `Found` result: one representative per set,
    /// each drawn from its set, jointly in general position.
    pub fn is_valid_for(&self, family: &PointFamily) -> bool {
        if !self.is_found() || self.representatives.len() != family.len() {
            return false;
        }
        let members_ok = self
            .representatives
            .iter()
            .enumerate()
            .all(|(i, r)| r.set == i && family.sets[i].points().get(r.index) == Some(&r.point));
        members_ok && exactgeom::in_general_position(&self.points()).unwrap_or(false)
    }
}
