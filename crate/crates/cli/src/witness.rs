//! Exploratory search for point sets with a prescribed φ whose general
//! position complex has nonvanishing reduced rational homology in low
//! degrees. A hit certifies that `φ(X) = target` does not force homological
//! `k`-connectivity; exhausting the budget proves nothing.

use gpreps_core::exactgeom::{self, Point, PointMultiset};
use gpreps_core::homology::betti_up_to;
use gpreps_core::solver::general_position_complex_with_budget;
use gpreps_core::HomologyOptions;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::doc::{point_coords, Coord};

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub d: usize,
    pub target_phi: usize,
    pub k: usize,
    /// Number of configurations to try.
    pub budget: u64,
    pub seed: u64,
    /// Largest number of points added beyond the general position core.
    pub max_extra: usize,
    pub homology: HomologyOptions,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub points: Vec<Vec<Coord>>,
    pub phi: usize,
    pub betti: Vec<usize>,
    pub f_vector: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub d: usize,
    pub target_phi: usize,
    pub k: usize,
    pub budget: u64,
    pub seed: u64,
    pub tried: u64,
    /// Configurations whose φ matched the target and were tested.
    pub examined: u64,
    pub status: &'static str,
    pub witness: Option<Witness>,
}

fn random_point(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Point {
    let coords: Vec<i64> = (0..d).map(|_| rng.random_range(-range..=range)).collect();
    Point::from_integers(&coords)
}

fn gp_core(rng: &mut ChaCha8Rng, d: usize, n: usize) -> Vec<Point> {
    let mut range = 4;
    let mut out: Vec<Point> = Vec::with_capacity(n);
    let mut misses = 0;
    while out.len() < n {
        let p = random_point(rng, d, range);
        let single = PointMultiset::new(d, vec![p.clone()]).expect("dimension matches");
        if exactgeom::extend_gp(&out, &single)
            .expect("dimension matches")
            .is_some()
        {
            out.push(p);
        } else {
            misses += 1;
            if misses % 64 == 0 {
                range *= 2;
            }
        }
    }
    out
}

/// A point on the affine hull of `span`: an affine combination with small
/// integer weights summing to one, which may leave the convex hull.
fn on_hull(rng: &mut ChaCha8Rng, span: &[&Point]) -> Point {
    let mut weights: Vec<i64> = (1..span.len()).map(|_| rng.random_range(-2..=3)).collect();
    weights.insert(0, 1 - weights.iter().sum::<i64>());
    let d = span[0].dim();
    let coords = (0..d)
        .map(|c| {
            span.iter()
                .zip(&weights)
                .map(|(p, &w)| &p.coords()[c] * BigRational::from_integer(w.into()))
                .sum()
        })
        .collect();
    Point::new(coords)
}

fn configuration(rng: &mut ChaCha8Rng, params: &SearchParams) -> Vec<Point> {
    let d = params.d;
    let mut pts = gp_core(rng, d, params.target_phi);
    let core = pts.len();
    for _ in 0..rng.random_range(0..=params.max_extra) {
        let p = match rng.random_range(0..3) {
            0 if core > 0 => pts[rng.random_range(0..core)].clone(),
            1 if core >= d => {
                let mut idx: Vec<usize> = (0..core).collect();
                rand::seq::SliceRandom::shuffle(idx.as_mut_slice(), rng);
                let span: Vec<&Point> = idx[..d].iter().map(|&i| &pts[i]).collect();
                on_hull(rng, &span)
            }
            _ => random_point(rng, d, 4),
        };
        pts.push(p);
    }
    pts
}

pub fn search(params: &SearchParams) -> anyhow::Result<SearchReport> {
    anyhow::ensure!(params.d >= 1, "dimension must be at least 1");
    anyhow::ensure!(
        params.target_phi + params.max_extra <= 64,
        "configurations are limited to 64 points"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut report = SearchReport {
        d: params.d,
        target_phi: params.target_phi,
        k: params.k,
        budget: params.budget,
        seed: params.seed,
        tried: 0,
        examined: 0,
        status: "none_within_budget",
        witness: None,
    };
    while report.tried < params.budget {
        report.tried += 1;
        let pts = configuration(&mut rng, params);
        let x = PointMultiset::new(params.d, pts)?;
        let phi = exactgeom::phi(&x);
        if phi != params.target_phi {
            continue;
        }
        report.examined += 1;
        let g =
            general_position_complex_with_budget(&x, params.k + 2, params.homology.face_budget)?;
        let profile = betti_up_to(&g, params.k, &params.homology)?;
        if !profile.vanishes() {
            report.status = "witness_found";
            report.witness = Some(Witness {
                points: x.iter().map(point_coords).collect(),
                phi,
                betti: profile.betti,
                f_vector: g.face_counts(),
            });
            break;
        }
    }
    Ok(report)
}
