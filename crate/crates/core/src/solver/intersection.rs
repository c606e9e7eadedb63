use alloc::vec::Vec;

use super::{PointFamily, SgprResult};
use crate::matroid::{matroid_intersection, AffineMatroid, PartitionMatroid};
use crate::{Error, Result};

/// Solve a family of at most `d + 1` sets through matroid intersection.
///
/// The ground set is the disjoint union of the sets. One matroid is the
/// affine matroid of the union, the other the partition matroid of the
/// sets. With at most `d + 1` sets, general position of the chosen points
/// is the same as affine independence, so a representative system exists
/// iff the largest common independent set has `m` elements.
pub fn solve_matroid_intersection(family: &PointFamily) -> Result<SgprResult> {
    let m = family.len();
    if m > family.dim() + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "matroid route needs at most d + 1 = {} sets, got {m}",
            family.dim() + 1
        )));
    }
    let (union, origin) = family.disjoint_union();
    let sizes: Vec<usize> = family.sets().iter().map(|s| s.len()).collect();
    let affine = AffineMatroid::new(union);
    let partition = PartitionMatroid::from_sizes(&sizes);
    let common = matroid_intersection(&affine, &partition)?;
    if common.len() == m {
        Ok(SgprResult::found(
            family,
            common.iter().map(|&e| origin[e]).collect(),
        ))
    } else {
        Ok(SgprResult::not_found())
    }
}
