//! Oracles and generators shared by the integration tests.
//!
//! The oracles deliberately avoid the crate's own algorithms: affine
//! independence is decided by elimination over the rationals on difference
//! vectors, φ and representative systems by brute force, complexes by
//! enumerating every vertex subset against the textbook definitions.

#![allow(dead_code)]

use gpreps_core::exactgeom::{self, Point, PointMultiset};
use gpreps_core::{Face, PointFamily, SimplicialComplex};
use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- geometry

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Affine independence via the rank of `p_i - p_0`.
pub fn oracle_independent(points: &[&Point]) -> bool {
    let Some((first, rest)) = points.split_first() else {
        return true;
    };
    let rows: Vec<Vec<BigRational>> = rest
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(first.coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    rational_rank(rows) == rest.len()
}

pub fn oracle_general_position(points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let k = points.len().min(first.dim() + 1);
    points
        .iter()
        .combinations(k)
        .all(|t| oracle_independent(&t))
}

/// Brute-force φ over all sub-multisets; meant for at most ~14 points.
pub fn oracle_phi(points: &[Point]) -> usize {
    for size in (1..=points.len()).rev() {
        if points
            .iter()
            .cloned()
            .combinations(size)
            .any(|s| oracle_general_position(&s))
        {
            return size;
        }
    }
    0
}

/// Whether some choice of one point per set is in general position,
/// by trying every choice.
pub fn oracle_sgpr_exists(family: &PointFamily) -> bool {
    family
        .sets()
        .iter()
        .map(|s| s.points().iter())
        .multi_cartesian_product()
        .any(|choice| {
            let pts: Vec<Point> = choice.into_iter().cloned().collect();
            oracle_general_position(&pts)
        })
}

/// Hall instance on the line: a system of distinct representatives of the
/// value sets, by augmenting paths.
pub fn hall_matching_exists(sets: &[Vec<i64>]) -> bool {
    let values: Vec<i64> = sets.iter().flatten().copied().sorted().dedup().collect();
    let adj: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            s.iter()
                .map(|v| values.binary_search(v).unwrap())
                .dedup()
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; values.len()];
    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &v in &adj[i] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|j| augment(j, adj, owner, seen)) {
                owner[v] = Some(i);
                return true;
            }
        }
        false
    }
    (0..sets.len()).all(|i| augment(i, &adj, &mut owner, &mut vec![false; values.len()]))
}

pub fn random_point(rng: &mut TestRng, d: usize, lo: i64, hi: i64) -> Point {
    let coords: Vec<i64> = (0..d).map(|_| rng.random_range(lo..=hi)).collect();
    Point::from_integers(&coords)
}

/// `n` random integer points in general position with coordinates in
/// `[-range, range]`.
pub fn random_gp_points(rng: &mut TestRng, d: usize, n: usize, range: i64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(n);
    while out.len() < n {
        let p = random_point(rng, d, -range, range);
        let single = PointMultiset::new(d, vec![p.clone()]).unwrap();
        if exactgeom::extend_gp(&out, &single).unwrap().is_some() {
            out.push(p);
        }
    }
    out
}

/// A random affine combination of `pts` with positive weights.
pub fn random_affine_combination(rng: &mut TestRng, pts: &[&Point]) -> Point {
    let weights: Vec<i64> = pts.iter().map(|_| rng.random_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    let d = pts[0].dim();
    let coords = (0..d)
        .map(|c| {
            pts.iter()
                .zip(&weights)
                .fold(BigRational::zero(), |acc, (p, &w)| {
                    acc + &p.coords()[c] * BigRational::new(w.into(), total.into())
                })
        })
        .collect();
    Point::new(coords)
}

pub fn multiset(d: usize, pts: Vec<Point>) -> PointMultiset {
    PointMultiset::new(d, pts).unwrap()
}

// ---------------------------------------------------------------- complexes

pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(out)
    })
}

fn has(k: &SimplicialComplex, mask: u64) -> bool {
    k.contains(Face::from_bits(mask))
}

fn complex_from_masks(n: usize, masks: impl IntoIterator<Item = u64>) -> SimplicialComplex {
    SimplicialComplex::from_faces(n, masks.into_iter().map(Face::from_bits)).unwrap()
}

/// `Δ_j(K)` by definition, restricted to faces of at most `cap` vertices.
pub fn oracle_completion(k: &SimplicialComplex, j: usize, cap: usize) -> SimplicialComplex {
    if k.is_void() {
        return k.clone();
    }
    let v = k.vertices().bits();
    let masks = submasks(v).filter(|&s| {
        let size = s.count_ones() as usize;
        if size > cap {
            return false;
        }
        has(k, s)
            || (size >= j + 2
                && submasks(s)
                    .filter(|t| t.count_ones() as usize == j + 1)
                    .all(|t| has(k, t)))
    });
    complex_from_masks(k.n_vertices(), masks.collect::<Vec<_>>())
}

/// `st_K(v) = {S : S ∪ {v} ∈ K}`.
pub fn oracle_star(k: &SimplicialComplex, v: usize) -> SimplicialComplex {
    let all = (1u64 << k.n_vertices()) - 1;
    let masks: Vec<u64> = submasks(all).filter(|&s| has(k, s | 1 << v)).collect();
    complex_from_masks(k.n_vertices(), masks)
}

/// `Γ_K(v)` with `d = dim K`.
pub fn oracle_gamma(k: &SimplicialComplex, v: usize) -> SimplicialComplex {
    let d = k.dim();
    let star = oracle_star(k, v);
    let all = (1u64 << k.n_vertices()) - 1;
    let extra = submasks(all & !(1 << v)).filter(|&s| {
        d >= 0
            && s.count_ones() as isize == d + 1
            && has(k, s)
            && submasks(s)
                .filter(|t| t.count_ones() as isize == d)
                .all(|t| has(&star, t))
    });
    let masks: Vec<u64> = star.faces().map(Face::bits).chain(extra).collect();
    complex_from_masks(k.n_vertices(), masks)
}

const P1: u64 = 1_000_000_007;
const P2: u64 = 998_244_353;

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut().skip(col) {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers `β̃_0..=β̃_up_to` from dense boundary matrices.
/// The rational rank is the larger of the ranks modulo two large primes;
/// both can only undercount, and for matrices this small they agree with
/// it in practice.
pub fn oracle_betti(k: &SimplicialComplex, up_to: usize) -> Vec<usize> {
    if k.is_void() {
        return vec![0; up_to + 1];
    }
    let levels: Vec<Vec<u64>> = (0..=up_to + 2)
        .map(|s| k.faces().filter(|f| f.len() == s).map(Face::bits).collect())
        .collect();
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || levels[s].is_empty() {
            return 0;
        }
        let ranks = [P1, P2].map(|p| {
            let rows = levels[s]
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; levels[s - 1].len()];
                    for (pos, v) in (0..64).filter(|v| f >> v & 1 == 1).enumerate() {
                        let col = levels[s - 1]
                            .iter()
                            .position(|&g| g == f & !(1 << v))
                            .unwrap();
                        row[col] = if pos % 2 == 0 { 1 } else { p - 1 };
                    }
                    row
                })
                .collect();
            rank_mod(rows, p)
        });
        ranks[0].max(ranks[1])
    };
    let ranks: Vec<usize> = (0..=up_to + 2).map(boundary_rank).collect();
    (0..=up_to)
        .map(|i| levels[i + 1].len() - ranks[i + 1] - ranks[i + 2])
        .collect()
}

/// A complex of dimension exactly `d` on `n` vertices: each `(d+1)`-subset
/// is a facet with probability `p`, plus a few random lower faces.
pub fn random_complex(rng: &mut TestRng, n: usize, d: usize, p: f64) -> SimplicialComplex {
    let mut facets: Vec<Vec<usize>> = (0..n)
        .combinations(d + 1)
        .filter(|_| rng.random_bool(p))
        .collect();
    if facets.is_empty() {
        facets.push((0..=d).collect());
    }
    for _ in 0..rng.random_range(0..=3) {
        let size = rng.random_range(1..=d.max(1));
        let mut pick: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(pick.as_mut_slice(), rng);
        pick.truncate(size);
        facets.push(pick);
    }
    SimplicialComplex::closure(n, &facets).unwrap()
}

/// A random subcomplex: the closure of a random selection of faces.
pub fn random_subcomplex(rng: &mut TestRng, k: &SimplicialComplex, p: f64) -> SimplicialComplex {
    let mut picked: Vec<Vec<usize>> = k
        .faces()
        .filter(|f| !f.is_empty() && rng.random_bool(p))
        .map(|f| f.vertices().collect())
        .collect();
    picked.push(Vec::new());
    SimplicialComplex::closure(k.n_vertices(), &picked).unwrap()
}
