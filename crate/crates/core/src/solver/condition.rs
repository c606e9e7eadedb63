use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PointFamily, Violation};
use crate::exactgeom;
use crate::{Error, Result};

/// Largest family accepted by [`ConditionMode::AllSubsets`].
pub const MAX_EXHAUSTIVE_SETS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionMode {
    /// Every nonempty subset of the family; needs `m <= 20`.
    AllSubsets,
    /// `samples` distinct nonempty subsets drawn from a seeded generator.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetVerdict {
    /// Set indices, increasing.
    pub subset: Vec<usize>,
    pub phi: usize,
    pub required: BigUint,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub verdicts: Vec<SubsetVerdict>,
    /// Position in `verdicts` of the first failing subset.
    pub first_violation: Option<usize>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn violation(&self) -> Option<Violation> {
        self.first_violation.map(|i| {
            let v = &self.verdicts[i];
            Violation {
                subset: v.subset.clone(),
                phi: v.phi,
                required: v.required.clone(),
            }
        })
    }
}

/// φ of unions of family members, memoized by subset bitmask.
#[derive(Default)]
pub(crate) struct PhiCache {
    memo: BTreeMap<u64, usize>,
}

impl PhiCache {
    pub(crate) fn phi(&mut self, family: &PointFamily, mask: u64) -> usize {
        *self.memo.entry(mask).or_insert_with(|| {
            let union = family.union_of((0..family.len()).filter(|&i| mask >> i & 1 == 1));
            exactgeom::phi(&union)
        })
    }
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Evaluate `φ(∪_{i ∈ I} X_i) >= bound(|I|)` over nonempty subsets `I`.
///
/// In `AllSubsets` mode subsets are visited by increasing bitmask, so the
/// first violation reported is the one with the smallest mask.
pub fn check_condition<F>(
    family: &PointFamily,
    bound: F,
    mode: ConditionMode,
) -> Result<ConditionReport>
where
    F: Fn(usize) -> BigUint,
{
    let m = family.len();
    let masks: Vec<u64> = match mode {
        ConditionMode::AllSubsets => {
            if m > MAX_EXHAUSTIVE_SETS {
                return Err(Error::BudgetExceeded {
                    what: "subset enumeration (sets)",
                    limit: MAX_EXHAUSTIVE_SETS,
                });
            }
            (1..1u64 << m).collect()
        }
        ConditionMode::Sampled { samples, seed } => {
            if m > 64 {
                return Err(Error::InvalidArgument(alloc::format!(
                    "sampled condition checks support at most 64 sets, got {m}"
                )));
            }
            let total = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            let want = (samples as u64).min(total) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = BTreeSet::new();
            while picked.len() < want {
                let mask = rng.random::<u64>() & total;
                if mask != 0 {
                    picked.insert(mask);
                }
            }
            picked.into_iter().collect()
        }
    };
    let mut cache = PhiCache::default();
    let mut verdicts = Vec::with_capacity(masks.len());
    let mut first_violation = None;
    for mask in masks {
        let subset = mask_indices(mask);
        let required = bound(subset.len());
        let phi = cache.phi(family, mask);
        let holds = BigUint::from(phi) >= required;
        if !holds && first_violation.is_none() {
            first_violation = Some(verdicts.len());
        }
        verdicts.push(SubsetVerdict {
            subset,
            phi,
            required,
            holds,
        });
    }
    Ok(ConditionReport {
        verdicts,
        first_violation,
    })
}
