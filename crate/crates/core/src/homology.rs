//! Reduced rational homology of simplicial complexes, truncated to low
//! degrees.
//!
//! Betti numbers in degrees `0..=k` only need the faces with at most `k + 2`
//! vertices, so callers may pass complexes that were enumerated up to that
//! size. Connectivity here is homological: vanishing of the reduced Betti
//! numbers over the rationals, which does not see the fundamental group.

use alloc::vec::Vec;

use crate::complex::{Face, SimplicialComplex};
use crate::linalg::{self, SparseRow};
use crate::{Error, Result};

/// Second prime used to cross-check modular ranks.
const CHECK_PRIME: u64 = 2_305_843_009_213_693_951;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyOptions {
    /// Maximum number of faces that may enter the boundary matrices.
    pub face_budget: usize,
    /// Compute ranks modulo this prime (below `2^62`) instead of exactly.
    /// A second fixed prime is used as a cross-check; when the two ranks
    /// disagree the rank is recomputed exactly.
    pub modulus: Option<u64>,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions {
            face_budget: 1 << 20,
            modulus: None,
        }
    }
}

/// Reduced Betti numbers `β̃_0..=β̃_up_to` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    pub up_to: usize,
    pub betti: Vec<usize>,
    /// `Σ (-1)^i f_i` over the faces of dimension `0..=up_to + 1` that were
    /// used.
    pub euler_partial: i64,
    /// True when `up_to >= dim K`, so the profile is the full homology and
    /// `euler_partial = 1 + Σ (-1)^i β̃_i` must hold for nonempty `K`.
    pub complete: bool,
}

impl BettiProfile {
    pub fn vanishes(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

fn boundary_rows(faces: &[Face], lower: &[Face]) -> Vec<SparseRow<i64>> {
    faces
        .iter()
        .map(|f| {
            let mut row: SparseRow<i64> = f
                .vertices()
                .enumerate()
                .map(|(pos, v)| {
                    let col = lower
                        .binary_search(&f.without(v))
                        .expect("complex is downward closed") as u32;
                    (col, if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|&(c, _)| c);
            row
        })
        .collect()
}

fn rank(rows: &[SparseRow<i64>], opts: &HomologyOptions) -> usize {
    match opts.modulus {
        None => linalg::sparse_rank(rows),
        Some(p) => {
            let fast = linalg::sparse_rank_mod(rows, p);
            if fast == linalg::sparse_rank_mod(rows, CHECK_PRIME) {
                fast
            } else {
                linalg::sparse_rank(rows)
            }
        }
    }
}

/// Reduced Betti numbers of `k` in degrees `0..=up_to`.
pub fn betti_up_to(
    k: &SimplicialComplex,
    up_to: usize,
    opts: &HomologyOptions,
) -> Result<BettiProfile> {
    let complete = k.dim() <= up_to as isize;
    if k.is_void() {
        return Ok(BettiProfile {
            up_to,
            betti: alloc::vec![0; up_to + 1],
            euler_partial: 0,
            complete,
        });
    }
    // levels[s] = faces with s vertices, s = 0..=up_to + 2
    let mut levels: Vec<Vec<Face>> = alloc::vec![Vec::new(); up_to + 3];
    let mut used = 0usize;
    for f in k.faces().take_while(|f| f.len() <= up_to + 2) {
        levels[f.len()].push(f);
        used += 1;
        if used > opts.face_budget {
            return Err(Error::BudgetExceeded {
                what: "face",
                limit: opts.face_budget,
            });
        }
    }
    // ranks[s] = rank of the boundary from faces of size s to size s - 1
    let mut ranks = alloc::vec![0usize; up_to + 3];
    for s in 1..=up_to + 2 {
        if levels[s].is_empty() {
            continue;
        }
        let rows = boundary_rows(&levels[s], &levels[s - 1]);
        ranks[s] = rank(&rows, opts);
    }
    let betti = (0..=up_to)
        .map(|i| levels[i + 1].len() - ranks[i + 1] - ranks[i + 2])
        .collect();
    let euler_partial = (1..=up_to + 2)
        .map(|s| {
            let c = levels[s].len() as i64;
            if s % 2 == 1 {
                c
            } else {
                -c
            }
        })
        .sum();
    Ok(BettiProfile {
        up_to,
        betti,
        euler_partial,
        complete,
    })
}

/// `(-1)`-connected means having a vertex; for `k >= 0` the complex must
/// also have vanishing reduced Betti numbers in degrees `0..=k`. Every
/// complex is `k`-connected for `k < -1`.
pub fn is_homologically_k_connected(
    complex: &SimplicialComplex,
    k: isize,
    opts: &HomologyOptions,
) -> Result<bool> {
    if k < -1 {
        return Ok(true);
    }
    if !complex.has_vertex() {
        return Ok(false);
    }
    if k == -1 {
        return Ok(true);
    }
    Ok(betti_up_to(complex, k as usize, opts)?.vanishes())
}
