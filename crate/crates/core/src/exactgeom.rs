//! Exact affine geometry over the rationals.
//!
//! Every predicate works on the homogeneous lift `x -> (q, q*x)` of a point,
//! where `q` is the least common denominator of its coordinates. A set of
//! points is affinely independent exactly when its lifted integer vectors
//! are linearly independent, so all predicates reduce to integer ranks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg;
use crate::{Error, Result};

/// A point of rational `d`-space. Coordinates are kept in reduced form by
/// `BigRational`, so structural equality is coordinate equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<BigRational>,
}

impl Point {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Point { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// Build a point from `(numerator, denominator)` pairs.
    ///
    /// Panics if a denominator is zero.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Point {
            coords: coords
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Integer homogeneous coordinates `(q, q*x_1, ..., q*x_d)` with `q > 0`.
    pub(crate) fn lift(&self) -> Vec<BigInt> {
        let q = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut out = Vec::with_capacity(self.coords.len() + 1);
        out.push(q.clone());
        for c in &self.coords {
            out.push(c.numer() * (&q / c.denom()));
        }
        out
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An ordered list of points in a fixed dimension. Coordinate-equal entries
/// are kept as distinct elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMultiset {
    dim: usize,
    points: Vec<Point>,
}

impl PointMultiset {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        check_dims(dim, &points)?;
        Ok(PointMultiset { dim, points })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn push(&mut self, p: Point) -> Result<()> {
        check_dims(self.dim, core::slice::from_ref(&p))?;
        self.points.push(p);
        Ok(())
    }

    /// Multiset union: the entries of `self` followed by those of `other`.
    pub fn union(&self, other: &PointMultiset) -> Result<PointMultiset> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Ok(PointMultiset {
            dim: self.dim,
            points,
        })
    }
}

fn check_dims(dim: usize, points: &[Point]) -> Result<()> {
    match points.iter().find(|p| p.dim() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

fn common_dim(points: &[Point]) -> Result<Option<usize>> {
    match points.first() {
        None => Ok(None),
        Some(p) => {
            check_dims(p.dim(), points)?;
            Ok(Some(p.dim()))
        }
    }
}

/// Lifted points with the incremental predicates used by every search in
/// the crate.
#[derive(Clone, Debug)]
pub(crate) struct Lifted {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    /// The same rows when every entry fits in an `i64`.
    small: Option<Vec<Vec<i128>>>,
}

impl Lifted {
    pub(crate) fn new(dim: usize, points: &[Point]) -> Self {
        let rows: Vec<Vec<BigInt>> = points.iter().map(Point::lift).collect();
        let small = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
            .collect();
        Lifted { dim, rows, small }
    }

    pub(crate) fn independent(&self, idx: &[usize]) -> bool {
        if idx.len() > self.dim + 1 {
            return false;
        }
        if idx.len() <= 1 {
            return true;
        }
        if let Some(small) = &self.small {
            let rows = idx.iter().map(|&i| small[i].clone()).collect();
            if let Some(r) = linalg::dense_rank_i128(rows) {
                return r == idx.len();
            }
        }
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.rows[i].clone()).collect();
        linalg::dense_rank(&rows) == idx.len()
    }

    /// Whether `chosen + {c}` is in general position, given that `chosen`
    /// is and that `c` already extends `chosen` without its last element.
    /// Only the tuples through that last element are tested.
    fn extends_after(&self, chosen: &[usize], c: usize) -> bool {
        let Some((&p, rest)) = chosen.split_last() else {
            return true;
        };
        let mut buf = Vec::with_capacity(self.dim + 1);
        if chosen.len() <= self.dim {
            buf.extend_from_slice(chosen);
            buf.push(c);
            return self.independent(&buf);
        }
        rest.iter()
            .copied()
            .combinations(self.dim - 1)
            .all(|mut t| {
                buf.clear();
                buf.append(&mut t);
                buf.push(p);
                buf.push(c);
                self.independent(&buf)
            })
    }

    /// Whether `chosen + {p}` is in general position, assuming `chosen` is.
    pub(crate) fn extends(&self, chosen: &[usize], p: usize) -> bool {
        let k = chosen.len().min(self.dim);
        let mut buf = Vec::with_capacity(k + 1);
        chosen.iter().copied().combinations(k).all(|mut t| {
            buf.clear();
            buf.append(&mut t);
            buf.push(p);
            self.independent(&buf)
        })
    }

    pub(crate) fn general_position(&self, idx: &[usize]) -> bool {
        let k = idx.len().min(self.dim + 1);
        idx.iter()
            .copied()
            .combinations(k)
            .all(|t| self.independent(&t))
    }
}

/// True iff the points are affinely independent. The empty set and
/// singletons are independent; more than `d + 1` points never are.
pub fn affinely_independent(points: &[Point]) -> Result<bool> {
    let Some(dim) = common_dim(points)? else {
        return Ok(true);
    };
    let lifted = Lifted::new(dim, points);
    let idx: Vec<usize> = (0..points.len()).collect();
    Ok(lifted.independent(&idx))
}

/// True iff every subset of at most `d + 1` of the points is affinely
/// independent. Coordinate-equal entries violate this.
pub fn in_general_position(points: &[Point]) -> Result<bool> {
    let Some(dim) = common_dim(points)? else {
        return Ok(true);
    };
    let lifted = Lifted::new(dim, points);
    let idx: Vec<usize> = (0..points.len()).collect();
    Ok(lifted.general_position(&idx))
}

/// Indices of the first occurrence of every distinct coordinate vector.
fn distinct_indices(points: &[Point]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    (0..points.len())
        .filter(|&i| seen.insert(&points[i]))
        .collect()
}

/// Above this many `d`-tuples the flats are not enumerated and the search
/// falls back to counting candidates.
const FLAT_TUPLE_LIMIT: usize = 60_000;

type Bits = Vec<u64>;

fn bits_of(n: usize, members: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = alloc::vec![0u64; n.div_ceil(64)];
    for i in members {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Hyperplanes holding more than `d` of the (distinct) points, as member
/// lists, largest first. Each such flat contributes at most `d` points to
/// any general position subset.
fn heavy_flats(dim: usize, pts: &[Point], lifted: &Lifted) -> Vec<Vec<usize>> {
    let n = pts.len();
    if dim < 2 || n <= dim {
        return Vec::new();
    }
    let tuples = (0..dim).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)));
    if tuples.is_none_or(|t| t > FLAT_TUPLE_LIMIT) {
        return Vec::new();
    }
    let mut flats: alloc::collections::BTreeMap<Hyperplane, BTreeSet<usize>> = Default::default();
    for tuple in (0..n).combinations(dim) {
        if !lifted.independent(&tuple) {
            continue;
        }
        let members: Vec<&Point> = tuple.iter().map(|&i| &pts[i]).collect();
        if let Some(h) = Hyperplane::through(&members) {
            flats.entry(h).or_default().extend(tuple);
        }
    }
    let mut heavy: Vec<Vec<usize>> = flats
        .into_values()
        .filter(|m| m.len() > dim)
        .map(|m| m.into_iter().collect())
        .collect();
    heavy.sort_by_key(|f| core::cmp::Reverse(f.len()));
    heavy
}

struct PhiSearch<'a> {
    lifted: &'a Lifted,
    dim: usize,
    n: usize,
    flats: Vec<Bits>,
    best: Vec<usize>,
    target: usize,
}

impl PhiSearch<'_> {
    /// Upper bound on what `chosen` can grow to: candidates are packed
    /// greedily into heavy flats, each flat admitting at most `d` chosen
    /// points overall.
    fn packing_bound(&self, chosen: &[usize], candidates: &[usize]) -> usize {
        let chosen_bits = bits_of(self.n, chosen.iter().copied());
        let mut free = bits_of(self.n, candidates.iter().copied());
        let mut bound = chosen.len();
        for flat in &self.flats {
            let here = count_and(flat, &free);
            let allow = self.dim.saturating_sub(count_and(flat, &chosen_bits));
            if here > allow {
                bound += allow;
                for (w, f) in free.iter_mut().zip(flat) {
                    *w &= !f;
                }
            }
        }
        bound + free.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    /// `candidates` are exactly the later points that extend `chosen`.
    fn run(&mut self, chosen: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            if self.best.len() >= self.target {
                return true;
            }
        }
        if chosen.len() + candidates.len() <= self.best.len() {
            return false;
        }
        if !self.flats.is_empty() && self.packing_bound(chosen, candidates) <= self.best.len() {
            return false;
        }
        for (pos, &p) in candidates.iter().enumerate() {
            if chosen.len() + (candidates.len() - pos) <= self.best.len() {
                break;
            }
            chosen.push(p);
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&c| self.lifted.extends_after(chosen, c))
                .collect();
            let done = self.run(chosen, &next);
            chosen.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// A maximum general position sub-multiset, as indices into `x` in
/// increasing order. Deterministic branch and bound: points on few heavy
/// hyperplanes are tried first, and candidate sets are bounded by packing
/// them into hyperplanes that hold more than `d` points.
pub fn max_general_position_subset(x: &PointMultiset) -> Vec<usize> {
    search_general_position(x, usize::MAX)
}

fn search_general_position(x: &PointMultiset, target: usize) -> Vec<usize> {
    let dim = x.dim();
    let distinct = distinct_indices(x.points());
    let pts: Vec<Point> = distinct.iter().map(|&i| x.points()[i].clone()).collect();
    let flats = heavy_flats(dim, &pts, &Lifted::new(dim, &pts));
    let mut load = alloc::vec![0usize; pts.len()];
    for flat in &flats {
        for &i in flat {
            load[i] += flat.len() - dim;
        }
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by_key(|&i| load[i]);
    let mut rank = alloc::vec![0usize; pts.len()];
    for (pos, &i) in order.iter().enumerate() {
        rank[i] = pos;
    }
    let ordered: Vec<Point> = order.iter().map(|&i| pts[i].clone()).collect();
    let lifted = Lifted::new(dim, &ordered);
    let n = ordered.len();
    let mut search = PhiSearch {
        lifted: &lifted,
        dim,
        n,
        flats: flats
            .iter()
            .map(|f| bits_of(n, f.iter().map(|&i| rank[i])))
            .collect(),
        best: Vec::new(),
        target,
    };
    let all: Vec<usize> = (0..n).collect();
    search.run(&mut Vec::new(), &all);
    let mut out: Vec<usize> = search
        .best
        .into_iter()
        .map(|i| distinct[order[i]])
        .collect();
    out.sort_unstable();
    out
}

/// Maximum size of a general position subset of `x`.
pub fn phi(x: &PointMultiset) -> usize {
    max_general_position_subset(x).len()
}

/// Whether `phi(x) >= target`, stopping as soon as a witness is found.
pub fn phi_at_least(x: &PointMultiset, target: usize) -> bool {
    target == 0 || search_general_position(x, target).len() >= target
}

/// An affine hyperplane `{x : normal . x = offset}` in canonical form: the
/// integer vector `(normal, offset)` has content 1 and the first nonzero
/// entry of `normal` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    /// Canonicalize `normal . x = offset`; `None` if `normal` is zero.
    pub fn new(mut normal: Vec<BigInt>, mut offset: BigInt) -> Option<Self> {
        let lead = normal.iter().find(|c| !c.is_zero())?.clone();
        let g = normal.iter().fold(offset.abs(), |g, c| g.gcd(c));
        if lead.is_negative() {
            offset = -offset;
            for c in normal.iter_mut() {
                *c = -&*c;
            }
        }
        for c in normal.iter_mut() {
            *c = &*c / &g;
        }
        offset /= &g;
        Some(Hyperplane { normal, offset })
    }

    /// Affine hull of `d` affinely independent points in `d`-space.
    fn through(points: &[&Point]) -> Option<Self> {
        let rows: Vec<Vec<BigInt>> = points.iter().map(|p| p.lift()).collect();
        // (c0, c) with c0 * q + c . (q x) = 0  <=>  c . x = -c0
        let mut kernel = linalg::kernel_vector(&rows);
        let c0 = kernel.remove(0);
        Hyperplane::new(kernel, -c0)
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn contains(&self, p: &Point) -> bool {
        let lhs: BigRational = self
            .normal
            .iter()
            .zip(p.coords())
            .map(|(a, x)| x * BigRational::from_integer(a.clone()))
            .fold(BigRational::zero(), |acc, t| acc + t);
        lhs == BigRational::from_integer(self.offset.clone())
    }
}

/// Affine hulls of all `d`-subsets of `s`, deduplicated. For `s` in general
/// position with `|s| >= d` there are exactly `C(|s|, d)` of them.
pub fn spanned_hyperplanes(s: &[Point]) -> Result<BTreeSet<Hyperplane>> {
    let Some(dim) = common_dim(s)? else {
        return Ok(BTreeSet::new());
    };
    if !in_general_position(s)? {
        return Err(Error::NotInGeneralPosition);
    }
    let mut out = BTreeSet::new();
    if s.len() < dim {
        return Ok(out);
    }
    for subset in s.iter().combinations(dim) {
        if let Some(h) = Hyperplane::through(&subset) {
            out.insert(h);
        }
    }
    Ok(out)
}

/// Index into `t` of the first point `p` with `s + {p}` in general position.
pub fn extend_gp_index(s: &[Point], t: &PointMultiset) -> Result<Option<usize>> {
    check_dims(t.dim(), s)?;
    let mut all: Vec<Point> = s.to_vec();
    all.extend(t.points().iter().cloned());
    let lifted = Lifted::new(t.dim(), &all);
    let chosen: Vec<usize> = (0..s.len()).collect();
    Ok((0..t.len()).find(|&j| lifted.extends(&chosen, s.len() + j)))
}

/// The first point `p` of `t` (in input order) such that `s + {p}` is in
/// general position, or `None`. `s` is assumed to be in general position.
pub fn extend_gp(s: &[Point], t: &PointMultiset) -> Result<Option<Point>> {
    Ok(extend_gp_index(s, t)?.map(|j| t.points()[j].clone()))
}
