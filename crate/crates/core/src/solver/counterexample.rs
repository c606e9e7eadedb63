use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_condition, ConditionMode, PointFamily};
use crate::exactgeom::{self, Point, PointMultiset};
use crate::{Error, Result};

/// Number of weight parameters tried before giving up.
pub const COUNTEREXAMPLE_ATTEMPTS: u32 = 16;

fn moment_point(d: usize, t: i64) -> Point {
    let mut coords = Vec::with_capacity(d);
    let mut power = 1i64;
    for _ in 0..d {
        power *= t;
        coords.push(power);
    }
    Point::from_integers(&coords)
}

/// A family of `m > d + 1` sets that satisfies `φ(∪_{i∈I} X_i) >= |I|` for
/// every nonempty `I` yet has no system of general position
/// representatives.
///
/// `X_1, ..., X_{m-1}` are single points on the moment curve
/// `(t, t^2, ..., t^d)` at `t = 1, ..., m - 1`. `X_m` has one point on the
/// hyperplane spanned by each `d`-subset of those singletons, a strictly
/// positive combination of the `d` spanning points whose weights come from
/// a generator seeded by `seed_param`. Any choice from `X_m` then lies on a
/// hyperplane through `d` of the other representatives. Each candidate is
/// verified exactly (singletons and `X_m` in general position, condition
/// holding for every subset) and the next parameter is tried on failure.
///
/// Needs `d >= 2`: on the line the condition is Hall's, which is sufficient.
pub fn counterexample_family(d: usize, m: usize, seed_param: u64) -> Result<PointFamily> {
    if d < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "no counterexample exists for d = {d}; the condition is sufficient on the line"
        )));
    }
    if m <= d + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "counterexamples need m > d + 1 = {}, got {m}",
            d + 1
        )));
    }
    let singletons: Vec<Point> = (1..m as i64).map(|t| moment_point(d, t)).collect();
    if !exactgeom::in_general_position(&singletons)? {
        return Err(Error::ConstructionFailed { attempts: 0 });
    }
    for attempt in 0..COUNTEREXAMPLE_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_param.wrapping_add(u64::from(attempt)));
        let last: Vec<Point> = singletons
            .iter()
            .combinations(d)
            .map(|tuple| {
                let weights: Vec<i64> = (0..d).map(|_| rng.random_range(1..=64)).collect();
                let total: i64 = weights.iter().sum();
                let coords = (0..d)
                    .map(|c| {
                        tuple
                            .iter()
                            .zip(&weights)
                            .fold(BigRational::zero(), |acc, (p, &w)| {
                                acc + &p.coords()[c] * BigRational::new(w.into(), total.into())
                            })
                    })
                    .collect();
                Point::new(coords)
            })
            .collect();
        if !exactgeom::in_general_position(&last)? {
            continue;
        }
        let mut sets: Vec<PointMultiset> = singletons
            .iter()
            .map(|p| PointMultiset::new(d, alloc::vec![p.clone()]))
            .collect::<Result<_>>()?;
        sets.push(PointMultiset::new(d, last)?);
        let family = PointFamily::new(d, sets)?;
        let report = check_condition(&family, BigUint::from, ConditionMode::AllSubsets)?;
        if report.holds() {
            return Ok(family);
        }
    }
    Err(Error::ConstructionFailed {
        attempts: COUNTEREXAMPLE_ATTEMPTS,
    })
}
