use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigUint;

use super::{bound_a, PointFamily, SgprResult, Violation};
use crate::exactgeom::{self, Point};

/// Largest family for which [`GreedyOptions::try_all_orders`] is honoured.
pub const MAX_REORDER_SETS: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GreedyOptions {
    /// When the ordering phase finds no qualifying set, still try the
    /// selection phase over every ordering of the sets (only for families
    /// of at most [`MAX_REORDER_SETS`] sets) before reporting the violation.
    pub try_all_orders: bool,
}

/// Greedy construction with the default options.
pub fn solve_greedy(family: &PointFamily) -> SgprResult {
    solve_greedy_with(family, &GreedyOptions::default())
}

/// Two-phase greedy construction.
///
/// Ordering: for `j = m` down to `1`, the lowest-indexed unplaced set with
/// `φ(X) >= A_d(j)` is placed at position `j`. If no unplaced set
/// qualifies the result is `ConditionViolated`; the violation lists the
/// unplaced sets, the largest single-set φ among them and `A_d(j)`.
///
/// Selection: positions `1..=m` are visited in order and each takes the
/// first point of its set that keeps the chosen points in general position.
/// Once the ordering phase succeeds this cannot fail, since position `k`
/// holds at least `A_d(k)` points in general position; a failure would be
/// reported as `NotFound`.
pub fn solve_greedy_with(family: &PointFamily, opts: &GreedyOptions) -> SgprResult {
    let d = family.dim() as u64;
    let m = family.len();
    let phis: Vec<usize> = family.sets().iter().map(exactgeom::phi).collect();
    let mut unplaced: Vec<usize> = (0..m).collect();
    let mut order = alloc::vec![0usize; m];
    for j in (1..=m).rev() {
        let need = bound_a(d, j as u64);
        match unplaced
            .iter()
            .position(|&i| BigUint::from(phis[i]) >= need)
        {
            Some(pos) => order[j - 1] = unplaced.remove(pos),
            None => {
                if opts.try_all_orders && m <= MAX_REORDER_SETS {
                    if let Some(picks) = (0..m).permutations(m).find_map(|p| select(family, &p)) {
                        return SgprResult::found(family, picks);
                    }
                }
                let phi = unplaced.iter().map(|&i| phis[i]).max().unwrap_or(0);
                return SgprResult::violated(Violation {
                    subset: unplaced,
                    phi,
                    required: need,
                });
            }
        }
    }
    match select(family, &order) {
        Some(picks) => SgprResult::found(family, picks),
        None => SgprResult::not_found(),
    }
}

fn select(family: &PointFamily, order: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut chosen: Vec<Point> = Vec::with_capacity(order.len());
    let mut picks = Vec::with_capacity(order.len());
    for &set in order {
        let idx = exactgeom::extend_gp_index(&chosen, &family.sets()[set]).ok()??;
        chosen.push(family.sets()[set].points()[idx].clone());
        picks.push((set, idx));
    }
    Some(picks)
}
