use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{PointFamily, SgprResult};
use crate::exactgeom::Lifted;
use crate::{Error, Result};

pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

struct Search<'a> {
    lifted: Lifted,
    /// Per set, flattened indices of its first occurrences of each distinct
    /// point; repeated coordinates inside a set are interchangeable.
    candidates: Vec<Vec<usize>>,
    origin: &'a [(usize, usize)],
    nodes: usize,
    budget: usize,
}

impl Search<'_> {
    fn run(&mut self, set: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        if set == self.candidates.len() {
            return Ok(true);
        }
        for c in 0..self.candidates[set].len() {
            let e = self.candidates[set][c];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    what: "solver node",
                    limit: self.budget,
                });
            }
            if self.lifted.extends(chosen, e) {
                chosen.push(e);
                if self.run(set + 1, chosen)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
}

/// Complete backtracking search: sets in order, points in input order,
/// pruning as soon as the partial choice leaves general position. Finds a
/// system of representatives iff one exists, and the one it returns is the
/// lexicographically first.
pub fn solve_exhaustive(family: &PointFamily, node_budget: usize) -> Result<SgprResult> {
    let (union, origin) = family.disjoint_union();
    let mut candidates = Vec::with_capacity(family.len());
    let mut offset = 0;
    for set in family.sets() {
        let mut seen = BTreeSet::new();
        candidates.push(
            (0..set.len())
                .filter(|&j| seen.insert(&set.points()[j]))
                .map(|j| offset + j)
                .collect(),
        );
        offset += set.len();
    }
    let mut search = Search {
        lifted: Lifted::new(family.dim(), union.points()),
        candidates,
        origin: &origin,
        nodes: 0,
        budget: node_budget,
    };
    let mut chosen = Vec::with_capacity(family.len());
    if search.run(0, &mut chosen)? {
        let picks = chosen.iter().map(|&e| search.origin[e]).collect();
        Ok(SgprResult::found(family, picks))
    } else {
        Ok(SgprResult::not_found())
    }
}
