use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `A_d(k)`: `k` when `k <= d + 1`, otherwise `d * C(k - 1, d) + 1`.
///
/// A general position set of `k - 1` points can always be extended by a
/// point of any general position set of at least `A_d(k)` points.
pub fn bound_a(d: u64, k: u64) -> BigUint {
    if k <= d + 1 {
        BigUint::from(k)
    } else {
        BigUint::from(d) * binomial(k - 1, d) + 1u32
    }
}

/// `B_d(k) = k * (A_d(k) - 1) + 1`, the per-subset φ threshold under which
/// the greedy solver always succeeds.
pub fn bound_b(d: u64, k: u64) -> BigUint {
    let a = bound_a(d, k);
    if a.is_zero() {
        return BigUint::one();
    }
    BigUint::from(k) * (a - 1u32) + 1u32
}

/// Upper bound on the φ threshold for `k`-connectivity of the general
/// position complex in dimension `d`: `k + 2` when `d = 1` or `k <= d - 1`,
/// and `d * C(2k + 2, d) + 1` otherwise. Requires `d >= 1`, `k >= -1`.
pub fn bound_g_upper(d: u64, k: i64) -> Result<BigUint> {
    if d == 0 || k < -1 {
        return Err(Error::InvalidArgument(format!(
            "g bound needs d >= 1, k >= -1 (d={d}, k={k})"
        )));
    }
    if d == 1 || k < d as i64 {
        return Ok(BigUint::from((k + 2) as u64));
    }
    Ok(BigUint::from(d) * binomial(2 * k as u64 + 2, d) + 1u32)
}

/// Upper bound on the μ threshold for `k`-connectivity of the uniformity
/// complex of a rank `r` matroid: `(r - 1) * C(2k + 2, r - 1) + 1`.
/// Requires `r >= 2`, `k >= -1`.
pub fn bound_h_upper(r: u64, k: i64) -> Result<BigUint> {
    if r < 2 || k < -1 {
        return Err(Error::InvalidArgument(format!(
            "h bound needs r >= 2, k >= -1 (r={r}, k={k})"
        )));
    }
    Ok(BigUint::from(r - 1) * binomial((2 * k + 2) as u64, r - 1) + 1u32)
}

/// Sufficient per-subset φ threshold from the topological route:
/// `g_upper(d, k - 2)`. Requires `k >= 1`.
pub fn bound_f_upper(d: u64, k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidArgument(format!(
            "f bound needs k >= 1 (k={k})"
        )));
    }
    bound_g_upper(d, k as i64 - 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub d: u64,
    pub k: u64,
    pub a: BigUint,
    pub b: BigUint,
    pub g_upper: BigUint,
    pub f_upper: BigUint,
    /// `h_upper(d + 1, k)`, the matroid analogue for rank `d + 1`.
    pub h_upper: BigUint,
}

/// All bound values over a grid of dimensions and arguments (`d, k >= 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    pub fn new(ds: RangeInclusive<u64>, ks: RangeInclusive<u64>) -> Result<Self> {
        if *ds.start() == 0 || *ks.start() == 0 {
            return Err(Error::InvalidArgument(format!(
                "bound table ranges start at 1 (d from {}, k from {})",
                ds.start(),
                ks.start()
            )));
        }
        let mut rows = Vec::new();
        for d in ds {
            for k in ks.clone() {
                rows.push(BoundRow {
                    d,
                    k,
                    a: bound_a(d, k),
                    b: bound_b(d, k),
                    g_upper: bound_g_upper(d, k as i64)?,
                    f_upper: bound_f_upper(d, k)?,
                    h_upper: bound_h_upper(d + 1, k as i64)?,
                });
            }
        }
        Ok(BoundTable { rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), n(15));
        assert_eq!(binomial(3, 5), n(0));
        assert_eq!(binomial(0, 0), n(1));
        assert_eq!(binomial(40, 20), n(137_846_528_820));
    }

    #[test]
    fn a_and_b_examples() {
        assert_eq!(bound_a(2, 3), n(3));
        assert_eq!(bound_a(2, 4), n(7));
        assert_eq!(bound_b(2, 4), n(25));
        assert_eq!(bound_b(2, 1), n(1));
        assert_eq!(bound_b(2, 2), n(3));
        assert_eq!(bound_b(2, 3), n(7));
    }

    #[test]
    fn topological_bounds() {
        for k in -1..6 {
            assert_eq!(bound_g_upper(1, k).unwrap(), n((k + 2) as u64));
        }
        assert_eq!(bound_g_upper(2, 2).unwrap(), n(31));
        assert_eq!(bound_g_upper(3, 1).unwrap(), n(3));
        assert_eq!(bound_h_upper(3, 2).unwrap(), n(31));
        assert_eq!(bound_f_upper(1, 5).unwrap(), n(5));
        assert_eq!(bound_f_upper(2, 4).unwrap(), n(31));
        assert!(bound_g_upper(0, 1).is_err());
        assert!(bound_g_upper(2, -2).is_err());
        assert!(bound_h_upper(1, 1).is_err());
        assert!(bound_f_upper(2, 0).is_err());
    }

    #[test]
    fn table_shape() {
        let t = BoundTable::new(1..=3, 1..=10).unwrap();
        assert_eq!(t.rows.len(), 30);
        assert!(BoundTable::new(0..=1, 1..=2).is_err());
    }
}
