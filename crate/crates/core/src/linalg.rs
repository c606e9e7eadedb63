//! Exact integer linear algebra: dense rank and determinants for the small
//! homogeneous matrices of the geometric predicates, and sparse rank for
//! boundary matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

trait ExactInt: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> ExactInt for T {}

/// `lhs * a - rhs * b`, `None` on overflow.
fn cross<T: ExactInt>(lhs: &T, a: &T, rhs: &T, b: &T) -> Option<T> {
    lhs.checked_mul(a)?.checked_sub(&rhs.checked_mul(b)?)
}

fn content_normalize<T: ExactInt>(row: &mut [T]) {
    let mut g = T::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.div_floor(&g);
    }
}

fn dense_rank_generic<T: ExactInt>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot_row[col].gcd(&row[col]);
            let pv = pivot_row[col].div_floor(&g);
            let f = row[col].div_floor(&g);
            for j in col..n_cols {
                row[j] = cross(&pv, &row[j], &f, &pivot_row[j])?;
            }
            content_normalize(&mut row[col + 1..]);
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank of a machine-integer matrix, `None` if elimination overflows.
pub(crate) fn dense_rank_i128(rows: Vec<Vec<i128>>) -> Option<usize> {
    dense_rank_generic(rows)
}

/// Rank over the rationals of an integer matrix given by rows.
pub(crate) fn dense_rank(rows: &[Vec<BigInt>]) -> usize {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = dense_rank_generic(small) {
            return r;
        }
    }
    dense_rank_generic(rows.to_vec()).expect("bigint arithmetic cannot overflow")
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub(crate) fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// A nonzero vector orthogonal to every row of an `r x (r + 1)` integer
/// matrix of full row rank, built from signed maximal minors.
pub(crate) fn kernel_vector(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n_cols = rows.len() + 1;
    (0..n_cols)
        .map(|skip| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = determinant(&minor);
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

pub(crate) type SparseRow<T> = Vec<(u32, T)>;

fn sparse_combine<T: ExactInt>(
    pv: &T,
    row: &SparseRow<T>,
    f: &T,
    pivot: &SparseRow<T>,
) -> Option<SparseRow<T>> {
    // pv * row - f * pivot, dropping zeros
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push((row[i].0, pv.checked_mul(&row[i].1)?));
            i += 1;
        } else if take_pivot {
            out.push((
                pivot[j].0,
                T::zero().checked_sub(&f.checked_mul(&pivot[j].1)?)?,
            ));
            j += 1;
        } else {
            let v = cross(pv, &row[i].1, f, &pivot[j].1)?;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    let mut g = T::zero();
    for (_, x) in &out {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in out.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
    Some(out)
}

fn sparse_rank_generic<T: ExactInt>(rows: Vec<SparseRow<T>>) -> Option<usize> {
    let mut pivots: BTreeMap<u32, SparseRow<T>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, ref lead_val)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    let g = pivot[0].1.gcd(lead_val);
                    let pv = pivot[0].1.div_floor(&g);
                    let f = lead_val.div_floor(&g);
                    row = sparse_combine(&pv, &row, &f, pivot)?;
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Exact rank over the rationals of a sparse integer matrix.
pub(crate) fn sparse_rank(rows: &[SparseRow<i64>]) -> usize {
    let wide: Vec<SparseRow<i128>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter(|&&(_, v)| v != 0)
                .map(|&(c, v)| (c, i128::from(v)))
                .collect()
        })
        .collect();
    if let Some(r) = sparse_rank_generic(wide) {
        return r;
    }
    let big: Vec<SparseRow<BigInt>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter(|&&(_, v)| v != 0)
                .map(|&(c, v)| (c, BigInt::from(v)))
                .collect()
        })
        .collect();
    sparse_rank_generic(big).expect("bigint arithmetic cannot overflow")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

/// Rank of a sparse integer matrix reduced modulo the prime `p`.
pub(crate) fn sparse_rank_mod(rows: &[SparseRow<i64>], p: u64) -> usize {
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut pivots: BTreeMap<u32, Vec<(u32, u64)>> = BTreeMap::new();
    for r in rows {
        let mut row: Vec<(u32, u64)> = r
            .iter()
            .map(|&(c, v)| (c, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, lead_val)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    // pivots are monic
                    let mut out = Vec::with_capacity(row.len() + pivot.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot.len() {
                        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else if i == row.len() || pivot[j].0 < row[i].0 {
                            out.push((pivot[j].0, (p - mul_mod(lead_val, pivot[j].1, p)) % p));
                            j += 1;
                        } else {
                            let v = (row[i].1 + p - mul_mod(lead_val, pivot[j].1, p)) % p;
                            if v != 0 {
                                out.push((row[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = pow_mod(lead_val, p - 2, p);
                    for (_, v) in row.iter_mut() {
                        *v = mul_mod(*v, inv, p);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn dense_rank_small_cases() {
        assert_eq!(dense_rank(&big(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]])), 3);
        assert_eq!(dense_rank(&big(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 2]])), 2);
        assert_eq!(dense_rank(&big(&[])), 0);
        assert_eq!(dense_rank(&big(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn dense_rank_falls_back_to_bigint() {
        let huge = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let rows = vec![
            vec![huge.clone(), BigInt::from(1)],
            vec![huge.clone() * 2, BigInt::from(2)],
        ];
        assert_eq!(dense_rank(&rows), 1);
        let m = i64::MAX / 2;
        assert_eq!(
            dense_rank(&big(&[&[m, m - 1, 3], &[m - 7, m, 5], &[1, 1, 1]])),
            3
        );
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        assert_eq!(
            determinant(&big(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])),
            BigInt::from(6)
        );
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn kernel_vector_is_orthogonal() {
        let rows = big(&[&[1, 0, 0], &[1, 1, 0]]);
        let v = kernel_vector(&rows);
        for r in &rows {
            let dot: BigInt = r.iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert!(v.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn sparse_and_modular_ranks_agree_on_triangle_boundary() {
        // edges {01, 02, 12} against vertices {0, 1, 2}
        let rows = vec![
            vec![(0, -1), (1, 1)],
            vec![(0, -1), (2, 1)],
            vec![(1, -1), (2, 1)],
        ];
        assert_eq!(sparse_rank(&rows), 2);
        assert_eq!(sparse_rank_mod(&rows, 1_000_000_007), 2);
    }

    #[test]
    fn modular_rank_can_drop_for_small_primes() {
        let rows = vec![vec![(0, 2), (1, 0)], vec![(1, 2)]];
        assert_eq!(sparse_rank(&rows), 2);
        assert_eq!(sparse_rank_mod(&rows, 2), 0);
    }
}
