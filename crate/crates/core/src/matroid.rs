//! Matroids given by independence oracles, maximum common independent sets,
//! and uniform subsets.
//!
//! A subset `S` is *uniform* in a matroid of rank `r` when it is independent,
//! or when `|S| > r` and every `r`-subset of `S` is independent. Uniform sets
//! form a simplicial complex, the `(r-1)`-completion of the independence
//! complex.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use itertools::Itertools;

use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::exactgeom::{Lifted, PointMultiset};
use crate::{Error, Result};

/// A matroid on the ground set `0..ground_size()`, given by an independence
/// oracle. Implementations are expected (not verified) to satisfy the
/// matroid axioms and to be loopless.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    /// `set` holds distinct in-range indices, in any order.
    fn is_independent(&self, set: &[usize]) -> bool;

    fn rank_hint(&self) -> Option<usize> {
        None
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }

    fn rank_hint(&self) -> Option<usize> {
        (**self).rank_hint()
    }
}

/// Element `i` is the `i`-th point; independent sets are the affinely
/// independent ones.
#[derive(Clone, Debug)]
pub struct AffineMatroid {
    points: PointMultiset,
    lifted: Lifted,
}

impl AffineMatroid {
    pub fn new(points: PointMultiset) -> Self {
        let lifted = Lifted::new(points.dim(), points.points());
        AffineMatroid { points, lifted }
    }

    pub fn points(&self) -> &PointMultiset {
        &self.points
    }
}

impl Matroid for AffineMatroid {
    fn ground_size(&self) -> usize {
        self.points.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.lifted.independent(set)
    }
}

/// Independent iff at most one element is taken from each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    block_of: Vec<usize>,
    n_blocks: usize,
}

impl PartitionMatroid {
    /// `blocks` must be disjoint and cover `0..n` for some `n`.
    pub fn new(blocks: &[Vec<usize>]) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = alloc::vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= n {
                    return Err(Error::IndexOutOfRange { index: e, size: n });
                }
                if block_of[e] != usize::MAX {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "element {e} appears in two blocks"
                    )));
                }
                block_of[e] = b;
            }
        }
        Ok(PartitionMatroid {
            block_of,
            n_blocks: blocks.len(),
        })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let block_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &s)| core::iter::repeat_n(b, s))
            .collect();
        PartitionMatroid {
            block_of,
            n_blocks: sizes.len(),
        }
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.block_of[e]
    }

    pub fn n_blocks(&self) -> usize {
        self.n_blocks
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut seen = BTreeSet::new();
        set.iter().all(|&e| seen.insert(self.block_of[e]))
    }

    fn rank_hint(&self) -> Option<usize> {
        let nonempty: BTreeSet<usize> = self.block_of.iter().copied().collect();
        Some(nonempty.len())
    }
}

/// `U_{rank, n}`: every set of at most `rank` elements is independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    pub rank: usize,
    pub n: usize,
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank
    }

    fn rank_hint(&self) -> Option<usize> {
        Some(self.rank.min(self.n))
    }
}

/// A matroid backed by an arbitrary predicate.
pub struct OracleMatroid<F> {
    n: usize,
    oracle: F,
}

impl<F: Fn(&[usize]) -> bool> OracleMatroid<F> {
    pub fn new(n: usize, oracle: F) -> Self {
        OracleMatroid { n, oracle }
    }
}

impl<F: Fn(&[usize]) -> bool> Matroid for OracleMatroid<F> {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        (self.oracle)(set)
    }
}

fn check_indices<M: Matroid + ?Sized>(m: &M, set: &[usize]) -> Result<()> {
    let size = m.ground_size();
    match set.iter().find(|&&e| e >= size) {
        Some(&index) => Err(Error::IndexOutOfRange { index, size }),
        None => Ok(()),
    }
}

fn greedy_basis<M: Matroid + ?Sized>(m: &M, set: &[usize]) -> Vec<usize> {
    let mut basis = Vec::new();
    for &e in set {
        if basis.contains(&e) {
            continue;
        }
        basis.push(e);
        if !m.is_independent(&basis) {
            basis.pop();
        }
    }
    basis
}

/// Size of a maximum independent subset of `set`, found greedily.
pub fn rank<M: Matroid + ?Sized>(m: &M, set: &[usize]) -> Result<usize> {
    check_indices(m, set)?;
    Ok(greedy_basis(m, set).len())
}

/// Rank of the whole ground set.
pub fn full_rank<M: Matroid + ?Sized>(m: &M) -> usize {
    m.rank_hint().unwrap_or_else(|| {
        let all: Vec<usize> = (0..m.ground_size()).collect();
        greedy_basis(m, &all).len()
    })
}

/// A maximum-cardinality common independent set of two matroids on the
/// same ground set, by repeated shortest augmenting paths in the exchange
/// graph. Ties are broken towards lower element indices, so the output is
/// deterministic. The returned indices are sorted.
pub fn matroid_intersection<A, B>(m1: &A, m2: &B) -> Result<Vec<usize>>
where
    A: Matroid + ?Sized,
    B: Matroid + ?Sized,
{
    let n = m1.ground_size();
    if n != m2.ground_size() {
        return Err(Error::GroundSizeMismatch {
            left: n,
            right: m2.ground_size(),
        });
    }
    let mut in_set = alloc::vec![false; n];
    loop {
        let current: Vec<usize> = (0..n).filter(|&e| in_set[e]).collect();
        let with = |y: usize| {
            let mut s = current.clone();
            s.push(y);
            s
        };
        let swap = |x: usize, y: usize| {
            let mut s: Vec<usize> = current.iter().copied().filter(|&e| e != x).collect();
            s.push(y);
            s
        };
        let outside: Vec<usize> = (0..n).filter(|&e| !in_set[e]).collect();
        let is_sink: Vec<bool> = (0..n)
            .map(|e| !in_set[e] && m2.is_independent(&with(e)))
            .collect();

        let mut parent: Vec<Option<usize>> = alloc::vec![None; n];
        let mut visited = alloc::vec![false; n];
        let mut queue = VecDeque::new();
        for &y in &outside {
            if m1.is_independent(&with(y)) {
                visited[y] = true;
                queue.push_back(y);
            }
        }
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if is_sink[u] {
                end = Some(u);
                break;
            }
            if in_set[u] {
                // u -> y when current - u + y is independent in m1
                for &y in &outside {
                    if !visited[y] && m1.is_independent(&swap(u, y)) {
                        visited[y] = true;
                        parent[y] = Some(u);
                        queue.push_back(y);
                    }
                }
            } else {
                // u -> x when current - x + u is independent in m2
                for &x in &current {
                    if !visited[x] && m2.is_independent(&swap(x, u)) {
                        visited[x] = true;
                        parent[x] = Some(u);
                        queue.push_back(x);
                    }
                }
            }
        }
        let Some(mut node) = end else {
            return Ok(current);
        };
        loop {
            in_set[node] = !in_set[node];
            match parent[node] {
                Some(p) => node = p,
                None => break,
            }
        }
        let next: Vec<usize> = (0..n).filter(|&e| in_set[e]).collect();
        if next.len() != current.len() + 1 {
            return Err(Error::OracleInconsistency(
                "augmenting path did not grow the set",
            ));
        }
        if !m1.is_independent(&next) || !m2.is_independent(&next) {
            return Err(Error::OracleInconsistency(
                "augmented set is not independent in both matroids",
            ));
        }
    }
}

/// Whether `set` is uniform in a matroid of rank `rank`.
pub fn is_uniform<M: Matroid + ?Sized>(m: &M, set: &[usize], rank: usize) -> Result<bool> {
    check_indices(m, set)?;
    if m.is_independent(set) {
        return Ok(true);
    }
    Ok(set.len() > rank
        && set
            .iter()
            .copied()
            .combinations(rank)
            .all(|s| m.is_independent(&s)))
}

/// Whether `set + {e}` is uniform, given that `set` is.
fn extends_uniform<M: Matroid + ?Sized>(m: &M, set: &[usize], e: usize, rank: usize) -> bool {
    let mut buf: Vec<usize> = Vec::with_capacity(set.len() + 1);
    if set.len() < rank {
        buf.extend_from_slice(set);
        buf.push(e);
        return m.is_independent(&buf);
    }
    if rank == 0 {
        return true;
    }
    set.iter().copied().combinations(rank - 1).all(|mut s| {
        buf.clear();
        buf.append(&mut s);
        buf.push(e);
        m.is_independent(&buf)
    })
}

/// A largest uniform subset, lexicographically first among the largest.
pub fn max_uniform_subset<M: Matroid + ?Sized>(m: &M) -> Vec<usize> {
    struct Search<'a, M: ?Sized> {
        m: &'a M,
        rank: usize,
        best: Vec<usize>,
    }
    impl<M: Matroid + ?Sized> Search<'_, M> {
        fn run(&mut self, start: usize, chosen: &mut Vec<usize>) {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            let n = self.m.ground_size();
            for e in start..n {
                if chosen.len() + (n - e) <= self.best.len() {
                    break;
                }
                if extends_uniform(self.m, chosen, e, self.rank) {
                    chosen.push(e);
                    self.run(e + 1, chosen);
                    chosen.pop();
                }
            }
        }
    }
    let mut search = Search {
        m,
        rank: full_rank(m),
        best: Vec::new(),
    };
    search.run(0, &mut Vec::new());
    search.best
}

/// `μ(M)`: the maximum size of a uniform subset.
pub fn mu<M: Matroid + ?Sized>(m: &M) -> usize {
    max_uniform_subset(m).len()
}

fn enumerate_complex<M, P>(m: &M, max_card: usize, mut extends: P) -> Result<SimplicialComplex>
where
    M: Matroid + ?Sized,
    P: FnMut(&[usize], usize) -> bool,
{
    let n = m.ground_size();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            requested: n,
            max: MAX_VERTICES,
        });
    }
    let mut faces = BTreeSet::new();
    let mut level: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    let mut size = 0;
    loop {
        for s in &level {
            faces.insert(Face::from_vertices(s.iter().copied())?);
        }
        if size >= max_card {
            break;
        }
        let mut next = Vec::new();
        for s in &level {
            let above = s.last().map_or(0, |&l| l + 1);
            for e in above..n {
                if extends(s, e) {
                    let mut t = s.clone();
                    t.push(e);
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        size += 1;
    }
    Ok(SimplicialComplex::from_closed(n, faces))
}

/// The independence complex: all independent sets, as faces.
pub fn independence_complex<M: Matroid + ?Sized>(m: &M) -> Result<SimplicialComplex> {
    let mut buf = Vec::new();
    enumerate_complex(m, usize::MAX, |s, e| {
        buf.clear();
        buf.extend_from_slice(s);
        buf.push(e);
        m.is_independent(&buf)
    })
}

/// All uniform subsets with at most `max_card` elements.
pub fn uniformity_complex<M: Matroid + ?Sized>(
    m: &M,
    max_card: usize,
) -> Result<SimplicialComplex> {
    let rank = full_rank(m);
    enumerate_complex(m, max_card, |s, e| extends_uniform(m, s, e, rank))
}

/// Default cardinality cap for [`uniformity_complex`]: `r + 3`.
pub fn default_uniformity_cap<M: Matroid + ?Sized>(m: &M) -> usize {
    full_rank(m) + 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Point;
    use alloc::vec;

    fn affine(coords: &[&[i64]]) -> AffineMatroid {
        let dim = coords[0].len();
        let pts = coords.iter().map(|c| Point::from_integers(c)).collect();
        AffineMatroid::new(PointMultiset::new(dim, pts).unwrap())
    }

    #[test]
    fn rank_examples() {
        let collinear = affine(&[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(rank(&collinear, &[0, 1, 2]).unwrap(), 2);
        assert_eq!(rank(&collinear, &[]).unwrap(), 0);
        let part = PartitionMatroid::new(&[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(rank(&part, &[0, 1]).unwrap(), 1);
        assert_eq!(
            rank(&part, &[3]).unwrap_err(),
            Error::IndexOutOfRange { index: 3, size: 3 }
        );
    }

    #[test]
    fn partition_matroid_validation() {
        assert!(PartitionMatroid::new(&[vec![0, 1], vec![1]]).is_err());
        assert!(PartitionMatroid::new(&[vec![0, 5]]).is_err());
        let p = PartitionMatroid::from_sizes(&[2, 0, 1]);
        assert_eq!(p.ground_size(), 3);
        assert_eq!(full_rank(&p), 2);
    }

    #[test]
    fn intersection_examples() {
        let free = UniformMatroid { rank: 3, n: 3 };
        assert_eq!(matroid_intersection(&free, &free).unwrap(), vec![0, 1, 2]);
        let twins = affine(&[&[0, 0], &[0, 0]]);
        let blocks = PartitionMatroid::new(&[vec![0], vec![1]]).unwrap();
        assert_eq!(matroid_intersection(&twins, &blocks).unwrap().len(), 1);
        let err = matroid_intersection(&free, &UniformMatroid { rank: 1, n: 2 }).unwrap_err();
        assert_eq!(err, Error::GroundSizeMismatch { left: 3, right: 2 });
    }

    #[test]
    fn intersection_needs_an_augmenting_exchange() {
        // Greedy would take element 0 from block {0, 1}; 0 is collinear
        // with the other blocks' only points, so the solver must swap it.
        let m1 = affine(&[&[1, 0], &[0, 1], &[0, 0], &[2, 0]]);
        let m2 = PartitionMatroid::new(&[vec![0, 1], vec![2], vec![3]]).unwrap();
        let best = matroid_intersection(&m1, &m2).unwrap();
        assert_eq!(best, vec![1, 2, 3]);
    }

    #[test]
    fn uniformity_examples() {
        let u24 = UniformMatroid { rank: 2, n: 4 };
        assert!(is_uniform(&u24, &[0, 1, 2, 3], 2).unwrap());
        let part = PartitionMatroid::new(&[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!is_uniform(&part, &[0, 1, 2], 2).unwrap());
        assert!(is_uniform(&part, &[0, 2], 2).unwrap());
        assert!(!is_uniform(&part, &[0, 1], 2).unwrap());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&UniformMatroid { rank: 2, n: 4 }), 4);
        assert_eq!(mu(&affine(&[&[0, 0], &[1, 0], &[2, 0]])), 3);
        assert_eq!(mu(&PartitionMatroid::from_sizes(&[2, 3, 1])), 3);
    }

    #[test]
    fn uniformity_complex_examples() {
        let u24 = UniformMatroid { rank: 2, n: 4 };
        assert_eq!(
            uniformity_complex(&u24, 4).unwrap(),
            SimplicialComplex::simplex(4).unwrap()
        );
        let part = PartitionMatroid::new(&[vec![0, 1], vec![2, 3]]).unwrap();
        let square =
            SimplicialComplex::closure(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
                .unwrap();
        assert_eq!(uniformity_complex(&part, 4).unwrap(), square);
        assert_eq!(default_uniformity_cap(&part), 5);
    }

    #[test]
    fn independence_complex_of_collinear_triple() {
        let m = affine(&[&[0, 0], &[1, 0], &[2, 0]]);
        let k = independence_complex(&m).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.num_faces(), 7);
    }
}
