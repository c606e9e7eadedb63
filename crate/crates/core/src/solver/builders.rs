use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{PointFamily, SgprResult};
use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::exactgeom::{Lifted, PointMultiset};
use crate::{Error, Result};

fn grow<P>(n: usize, max_card: usize, budget: usize, mut extends: P) -> Result<SimplicialComplex>
where
    P: FnMut(&[usize], usize) -> bool,
{
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            requested: n,
            max: MAX_VERTICES,
        });
    }
    let mut faces = BTreeSet::new();
    faces.insert(Face::EMPTY);
    let mut level: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for _ in 0..max_card {
        let mut next = Vec::new();
        for s in &level {
            let above = s.last().map_or(0, |&l| l + 1);
            for e in above..n {
                if extends(s, e) {
                    let mut t = s.clone();
                    t.push(e);
                    faces.insert(Face::from_vertices(t.iter().copied())?);
                    if faces.len() > budget {
                        return Err(Error::BudgetExceeded {
                            what: "face",
                            limit: budget,
                        });
                    }
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(SimplicialComplex::from_closed(n, faces))
}

/// `M(X)`: the affinely independent sub-multisets of `x`, one vertex per
/// entry (coordinate-equal entries are distinct vertices).
pub fn independence_complex(x: &PointMultiset) -> Result<SimplicialComplex> {
    independence_complex_with_budget(x, usize::MAX)
}

/// [`independence_complex`] failing once more than `face_budget` faces
/// have been produced.
pub fn independence_complex_with_budget(
    x: &PointMultiset,
    face_budget: usize,
) -> Result<SimplicialComplex> {
    let lifted = Lifted::new(x.dim(), x.points());
    let mut buf = Vec::new();
    grow(x.len(), x.dim() + 1, face_budget, |s, e| {
        buf.clear();
        buf.extend_from_slice(s);
        buf.push(e);
        lifted.independent(&buf)
    })
}

/// `G(X)`: the sub-multisets of `x` in general position with at most
/// `max_card` elements.
pub fn general_position_complex(x: &PointMultiset, max_card: usize) -> Result<SimplicialComplex> {
    general_position_complex_with_budget(x, max_card, usize::MAX)
}

/// [`general_position_complex`] failing once more than `face_budget` faces
/// have been produced.
pub fn general_position_complex_with_budget(
    x: &PointMultiset,
    max_card: usize,
    face_budget: usize,
) -> Result<SimplicialComplex> {
    let lifted = Lifted::new(x.dim(), x.points());
    grow(x.len(), max_card, face_budget, |s, e| lifted.extends(s, e))
}

/// The vertex partition of `G(X_1 ⊔ ... ⊔ X_m)` induced by the family.
pub fn colorful_blocks(family: &PointFamily) -> Vec<Face> {
    let mut start = 0;
    family
        .sets()
        .iter()
        .map(|s| {
            let block = Face::range(start + s.len()).difference(Face::range(start));
            start += s.len();
            block
        })
        .collect()
}

/// Solve through the general position complex: a system of
/// representatives is exactly a colorful simplex of `G(X_1 ⊔ ... ⊔ X_m)`.
/// Limited to families with at most 64 points in total.
pub fn solve_colorful(family: &PointFamily) -> Result<SgprResult> {
    let (union, origin) = family.disjoint_union();
    let g = general_position_complex(&union, family.len())?;
    match g.find_colorful_simplex(&colorful_blocks(family)) {
        Some(face) => Ok(SgprResult::found(
            family,
            face.vertices().map(|v| origin[v]).collect(),
        )),
        None => Ok(SgprResult::not_found()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Point;
    use crate::solver::SgprStatus;
    use alloc::vec;

    fn multiset(dim: usize, coords: &[&[i64]]) -> PointMultiset {
        PointMultiset::new(
            dim,
            coords.iter().map(|c| Point::from_integers(c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn line_multiset_gives_a_square() {
        let x = multiset(1, &[&[0], &[0], &[1], &[1]]);
        let g = general_position_complex(&x, 4).unwrap();
        let square =
            SimplicialComplex::closure(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
                .unwrap();
        assert_eq!(g, square);
    }

    #[test]
    fn four_points_in_general_position_span_a_simplex() {
        let x = multiset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            general_position_complex(&x, 4).unwrap(),
            SimplicialComplex::simplex(4).unwrap()
        );
        let m = independence_complex(&x).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(
            m,
            SimplicialComplex::simplex(4).unwrap().skeleton(2).unwrap()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let x = multiset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(general_position_complex_with_budget(&x, 4, 16).is_ok());
        assert_eq!(
            general_position_complex_with_budget(&x, 4, 15).unwrap_err(),
            Error::BudgetExceeded {
                what: "face",
                limit: 15
            }
        );
    }

    #[test]
    fn colorful_route_agrees_on_small_cases() {
        let f = PointFamily::from_integer_sets(2, &[&[&[0, 0]], &[&[1, 0]], &[&[2, 0], &[0, 1]]])
            .unwrap();
        let r = solve_colorful(&f).unwrap();
        assert!(r.is_valid_for(&f));
        let f = PointFamily::from_integer_sets(2, &[&[&[0, 0]], &[&[0, 0]]]).unwrap();
        assert_eq!(solve_colorful(&f).unwrap().status, SgprStatus::NotFound);
    }
}
