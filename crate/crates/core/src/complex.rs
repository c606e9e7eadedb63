//! Finite simplicial complexes on at most 64 vertices, stored as explicit
//! downward-closed sets of bitmask faces, with the operators used by the
//! connectivity arguments: star, neighborhood complex, j-completion,
//! induced subcomplex, skeleton, join, nerve and the q-star predicate.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use itertools::Itertools;

use crate::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices below [`MAX_VERTICES`].
///
/// Faces order first by size and then lexicographically by their sorted
/// vertex lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::TooManyVertices {
                    requested: v + 1,
                    max: MAX_VERTICES,
                });
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    /// The face `{0, ..., n - 1}`.
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets, including the empty face and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut cur = Some(0u64);
        core::iter::from_fn(move || {
            let out = cur?;
            cur = if out == full {
                None
            } else {
                Some(out.wrapping_sub(full) & full)
            };
            Some(Face(out))
        })
    }

    /// Subsets of exactly `size` vertices.
    pub fn subsets_of_size(self, size: usize) -> impl Iterator<Item = Face> {
        self.vertices()
            .combinations(size)
            .map(|vs| Face(vs.into_iter().fold(0, |acc, v| acc | (1 << v))))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// A downward-closed family of faces on the vertex universe
/// `0..n_vertices`.
///
/// The *void* complex has no faces at all. Any other complex contains the
/// empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    faces: BTreeSet<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n_vertices", &self.n_vertices)
            .field("facets", &self.facets())
            .finish()
    }
}

fn check_universe(n_vertices: usize) -> Result<()> {
    if n_vertices > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            requested: n_vertices,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

fn check_vertex(v: usize, n_vertices: usize) -> Result<()> {
    if v >= n_vertices {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n_vertices,
        });
    }
    Ok(())
}

fn check_face(face: Face, n_vertices: usize) -> Result<()> {
    match face.max_vertex() {
        Some(v) if v >= n_vertices => Err(Error::VertexOutOfRange {
            vertex: v,
            n_vertices,
        }),
        _ => Ok(()),
    }
}

impl SimplicialComplex {
    /// The void complex (no faces, not even the empty one).
    pub fn void(n_vertices: usize) -> Result<Self> {
        check_universe(n_vertices)?;
        Ok(SimplicialComplex {
            n_vertices,
            faces: BTreeSet::new(),
        })
    }

    /// The full simplex on all `n_vertices` vertices.
    pub fn simplex(n_vertices: usize) -> Result<Self> {
        check_universe(n_vertices)?;
        Ok(SimplicialComplex {
            n_vertices,
            faces: Face::range(n_vertices).subsets().collect(),
        })
    }

    /// Smallest complex containing the given facets.
    pub fn closure(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_universe(n_vertices)?;
        let mut faces = BTreeSet::new();
        for facet in facets {
            for &v in facet {
                check_vertex(v, n_vertices)?;
            }
            let f = Face::from_vertices(facet.iter().copied())?;
            faces.extend(f.subsets());
        }
        Ok(SimplicialComplex { n_vertices, faces })
    }

    /// Downward closure of arbitrary faces.
    pub fn from_faces<I: IntoIterator<Item = Face>>(n_vertices: usize, faces: I) -> Result<Self> {
        check_universe(n_vertices)?;
        let mut out = BTreeSet::new();
        for f in faces {
            check_face(f, n_vertices)?;
            if !out.contains(&f) {
                out.extend(f.subsets());
            }
        }
        Ok(SimplicialComplex {
            n_vertices,
            faces: out,
        })
    }

    /// Wrap a face set the caller knows to be downward closed.
    pub(crate) fn from_closed(n_vertices: usize, faces: BTreeSet<Face>) -> Self {
        debug_assert!(faces
            .iter()
            .all(|f| f.subsets().all(|s| faces.contains(&s))));
        SimplicialComplex { n_vertices, faces }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Maximum face size minus one; `-1` for the void complex and `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces
            .iter()
            .next_back()
            .map_or(-1, |f| f.len() as isize - 1)
    }

    pub fn faces(&self) -> impl DoubleEndedIterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_set(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied().filter(move |f| f.len() == size)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Whether some nonempty face exists, i.e. the geometric realization is
    /// a nonempty space.
    pub fn has_vertex(&self) -> bool {
        self.faces.iter().any(|f| !f.is_empty())
    }

    /// Union of the vertex singletons present.
    pub fn vertices(&self) -> Face {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Maximal faces, in face order.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::new();
        for f in self.faces.iter().rev() {
            if !out.iter().any(|g| f.is_subset(*g)) {
                out.push(*f);
            }
        }
        out.reverse();
        out
    }

    /// Number of faces of each size `0, 1, ..., dim + 1`.
    pub fn face_counts(&self) -> Vec<usize> {
        let top = (self.dim() + 2).max(0) as usize;
        let mut counts = alloc::vec![0; top];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices: self.n_vertices.max(other.n_vertices),
            faces: self.faces.intersection(&other.faces).copied().collect(),
        }
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices: self.n_vertices.max(other.n_vertices),
            faces: self.faces.union(&other.faces).copied().collect(),
        }
    }

    /// `st_K(v) = {S : S ∪ {v} ∈ K}`. Void unless `{v}` is a face.
    pub fn star(&self, v: usize) -> Result<SimplicialComplex> {
        check_vertex(v, self.n_vertices)?;
        let mut faces = BTreeSet::new();
        for f in self.faces.iter().filter(|f| f.contains(v)) {
            faces.insert(*f);
            faces.insert(f.without(v));
        }
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices,
            faces,
        })
    }

    /// The neighborhood complex `Γ_K(v)`: the star of `v` together with the
    /// `(d+1)`-element faces avoiding `v` whose `d`-subsets all lie in the
    /// star. `d` must equal `dim K`; the operator is not monotone under
    /// passing to subcomplexes, so the dimension is never inferred silently.
    pub fn neighborhood(&self, v: usize, d: isize) -> Result<SimplicialComplex> {
        check_vertex(v, self.n_vertices)?;
        let actual = self.dim();
        if d != actual {
            return Err(Error::DimensionParameter { given: d, actual });
        }
        let mut out = self.star(v)?;
        if d < 0 {
            return Ok(out);
        }
        let top = d as usize + 1;
        let added: Vec<Face> = self
            .faces_of_size(top)
            .filter(|f| !f.contains(v))
            .filter(|f| f.subsets_of_size(top - 1).all(|s| out.faces.contains(&s)))
            .collect();
        out.faces.extend(added);
        Ok(out)
    }

    /// The j-completion `Δ_j(K)`: `K` plus every vertex set of size at least
    /// `j + 2` all of whose `(j+1)`-subsets are faces of `K`, truncated to
    /// faces of at most `max_card` vertices.
    pub fn completion(&self, j: isize, max_card: usize) -> Result<SimplicialComplex> {
        self.completion_with_budget(j, max_card, usize::MAX)
    }

    /// [`completion`](Self::completion) failing once more than `face_budget`
    /// faces have been produced.
    pub fn completion_with_budget(
        &self,
        j: isize,
        max_card: usize,
        face_budget: usize,
    ) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Ok(self.clone());
        }
        let dim = self.dim();
        if j < dim {
            return Err(Error::CompletionBelowDimension { j, dim });
        }
        let mut faces: BTreeSet<Face> = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.len() <= max_card)
            .collect();
        if faces.len() > face_budget {
            return Err(Error::BudgetExceeded {
                what: "face",
                limit: face_budget,
            });
        }
        let base = (j + 1) as usize;
        let vertices = self.vertices();
        // every face of size `base` comes from K: Δ_j only adds larger sets
        let mut level: Vec<Face> = self.faces_of_size(base).collect();
        let mut size = base + 1;
        while size <= max_card && !level.is_empty() {
            let mut next = Vec::new();
            for f in &level {
                let above = f.max_vertex().map_or(0, |m| m + 1);
                for u in vertices.vertices().filter(|&u| u >= above) {
                    let g = f.with(u);
                    if g.vertices().all(|w| faces.contains(&g.without(w))) {
                        next.push(g);
                    }
                }
            }
            if faces.len() + next.len() > face_budget {
                return Err(Error::BudgetExceeded {
                    what: "face",
                    limit: face_budget,
                });
            }
            faces.extend(next.iter().copied());
            level = next;
            size += 1;
        }
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices,
            faces,
        })
    }

    /// The induced subcomplex `K[W]`: faces contained in `w`.
    pub fn induced(&self, w: Face) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices: self.n_vertices,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| f.is_subset(w))
                .collect(),
        }
    }

    /// Faces with at most `s + 1` vertices; `s >= -1`.
    pub fn skeleton(&self, s: isize) -> Result<SimplicialComplex> {
        if s < -1 {
            return Err(Error::InvalidArgument(alloc::format!(
                "skeleton dimension {s} < -1"
            )));
        }
        let cap = (s + 1) as usize;
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| f.len() <= cap)
                .collect(),
        })
    }

    /// The join `K * L`. Vertices of `L` are shifted up by `K.n_vertices()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n_vertices + other.n_vertices;
        check_universe(n)?;
        let shift = self.n_vertices;
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                let moved = if shift >= 64 { 0 } else { b.bits() << shift };
                faces.insert(Face(a.bits() | moved));
            }
        }
        Ok(SimplicialComplex {
            n_vertices: n,
            faces,
        })
    }

    /// Whether some face meets every block of `blocks` in exactly one
    /// vertex. Blocks are assumed pairwise disjoint.
    pub fn find_colorful_simplex(&self, blocks: &[Face]) -> Option<Face> {
        fn go(k: &SimplicialComplex, blocks: &[Face], acc: Face) -> Option<Face> {
            let Some((first, rest)) = blocks.split_first() else {
                return Some(acc);
            };
            first
                .vertices()
                .map(|v| acc.with(v))
                .filter(|f| k.contains(*f))
                .find_map(|f| go(k, rest, f))
        }
        if self.is_void() {
            return None;
        }
        go(self, blocks, Face::EMPTY)
    }

    /// Evaluate the q-star property with `d = dim K`: more than `q` vertices,
    /// and for every `q`-subset `Y` of vertices some vertex `v` outside `Y`
    /// extends every face `S` of `K[Y]` with `|S| <= d` to a face
    /// `S ∪ {v}`.
    pub fn q_star(&self, q: usize) -> Result<QStarReport> {
        if q == 0 {
            return Err(Error::InvalidArgument(String::from(
                "q-star requires q >= 1",
            )));
        }
        let vertices = self.vertices();
        if vertices.len() <= q {
            return Ok(QStarReport {
                q,
                holds: false,
                violation: Some(QStarViolation::TooFewVertices {
                    have: vertices.len(),
                }),
                extenders: Vec::new(),
            });
        }
        let small = self.dim().max(0) as usize;
        let mut extenders = Vec::new();
        for y in vertices.subsets_of_size(q) {
            let small_faces: Vec<Face> = (0..=small.min(q))
                .flat_map(|s| y.subsets_of_size(s))
                .filter(|s| self.contains(*s))
                .collect();
            let found = vertices
                .difference(y)
                .vertices()
                .find(|&v| small_faces.iter().all(|s| self.contains(s.with(v))));
            match found {
                Some(v) => extenders.push((y, v)),
                None => {
                    return Ok(QStarReport {
                        q,
                        holds: false,
                        violation: Some(QStarViolation::Uncovered(y)),
                        extenders: Vec::new(),
                    })
                }
            }
        }
        Ok(QStarReport {
            q,
            holds: true,
            violation: None,
            extenders,
        })
    }
}

/// Outcome of [`SimplicialComplex::q_star`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QStarReport {
    pub q: usize,
    pub holds: bool,
    pub violation: Option<QStarViolation>,
    /// For every `q`-subset `Y`, the first vertex that extends it. Empty
    /// unless the property holds.
    pub extenders: Vec<(Face, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QStarViolation {
    /// The complex has at most `q` vertices.
    TooFewVertices { have: usize },
    /// No vertex extends the small faces of this `q`-subset.
    Uncovered(Face),
}

/// Labeled subcomplexes over one vertex universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledFamily {
    n_vertices: usize,
    members: Vec<(String, SimplicialComplex)>,
}

impl LabeledFamily {
    pub fn new(n_vertices: usize, members: Vec<(String, SimplicialComplex)>) -> Result<Self> {
        check_universe(n_vertices)?;
        if members.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: members.len(),
                max: MAX_VERTICES,
            });
        }
        for (_, k) in &members {
            if k.n_vertices() != n_vertices {
                return Err(Error::InvalidArgument(alloc::format!(
                    "member on {} vertices in a family over {n_vertices}",
                    k.n_vertices()
                )));
            }
        }
        Ok(LabeledFamily {
            n_vertices,
            members,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn members(&self) -> &[(String, SimplicialComplex)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The nerve: vertex `i` stands for member `i`, and a set of members is
    /// a face iff the members share a vertex (their intersection is a
    /// nonempty space). Sharing only the empty face does not count.
    pub fn nerve(&self) -> SimplicialComplex {
        let supports: Vec<Face> = self.members.iter().map(|(_, k)| k.vertices()).collect();
        let n = supports.len();
        let mut faces = BTreeSet::new();
        if n == 0 {
            return SimplicialComplex {
                n_vertices: 0,
                faces,
            };
        }
        faces.insert(Face::EMPTY);
        let mut level: Vec<(Face, Face)> = (0..n)
            .filter(|&i| !supports[i].is_empty())
            .map(|i| (Face::EMPTY.with(i), supports[i]))
            .collect();
        while !level.is_empty() {
            faces.extend(level.iter().map(|(g, _)| *g));
            let mut next = Vec::new();
            for (g, common) in &level {
                let above = g.max_vertex().map_or(0, |m| m + 1);
                for (i, support) in supports.iter().enumerate().skip(above) {
                    let meet = common.intersection(*support);
                    if !meet.is_empty() {
                        next.push((g.with(i), meet));
                    }
                }
            }
            level = next;
        }
        SimplicialComplex {
            n_vertices: n,
            faces,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied()).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::closure(n, &facets).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    #[test]
    fn face_order_is_size_then_lexicographic() {
        let mut fs = vec![
            face(&[1, 2]),
            face(&[0]),
            face(&[0, 2]),
            face(&[]),
            face(&[0, 1]),
        ];
        fs.sort();
        assert_eq!(
            fs,
            vec![
                face(&[]),
                face(&[0]),
                face(&[0, 1]),
                face(&[0, 2]),
                face(&[1, 2])
            ]
        );
        assert_eq!(face(&[0, 3]).subsets().count(), 4);
        assert_eq!(face(&[0, 3, 5]).subsets_of_size(2).count(), 3);
    }

    #[test]
    fn closure_examples() {
        let k = cx(3, &[&[0, 1, 2]]);
        assert_eq!(k.num_faces(), 8);
        assert_eq!(k.dim(), 2);
        let void = cx(3, &[]);
        assert!(void.is_void());
        assert_eq!(void.dim(), -1);
        let two = cx(2, &[&[0], &[1]]);
        assert_eq!(two.num_faces(), 3);
        assert_eq!(two.facets(), vec![face(&[0]), face(&[1])]);
        let err = SimplicialComplex::closure(2, &[vec![0, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::VertexOutOfRange {
                vertex: 2,
                n_vertices: 2
            }
        );
    }

    #[test]
    fn star_examples() {
        let simplex = cx(3, &[&[0, 1, 2]]);
        assert_eq!(simplex.star(0).unwrap(), simplex);
        let edges = cx(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(edges.star(0).unwrap(), cx(4, &[&[0, 1]]));
        let star = tetra_boundary().star(0).unwrap();
        let expected: BTreeSet<Face> = tetra_boundary()
            .faces()
            .filter(|f| *f != face(&[1, 2, 3]))
            .collect();
        assert_eq!(star.face_set(), &expected);
        assert!(edges.star(4).is_err());
        assert!(cx(4, &[&[1, 2]]).star(0).unwrap().is_void());
    }

    #[test]
    fn neighborhood_examples() {
        let points = cx(3, &[&[0], &[1], &[2]]);
        assert_eq!(points.neighborhood(1, 0).unwrap(), points);
        let with_isolated = cx(3, &[&[0, 1], &[2]]);
        assert_eq!(with_isolated.neighborhood(2, 1).unwrap(), cx(3, &[&[2]]));
        assert_eq!(
            tetra_boundary().neighborhood(0, 2).unwrap(),
            tetra_boundary()
        );
        let err = tetra_boundary().neighborhood(0, 1).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionParameter {
                given: 1,
                actual: 2
            }
        );
    }

    #[test]
    fn completion_examples() {
        let points = cx(3, &[&[0], &[1], &[2]]);
        assert_eq!(points.completion(0, 3).unwrap(), cx(3, &[&[0, 1, 2]]));
        let tri = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(tri.completion(1, 3).unwrap(), cx(3, &[&[0, 1, 2]]));
        assert_eq!(tri.completion(2, 3).unwrap(), tri);
        assert_eq!(tri.completion(1, 2).unwrap(), tri);
        assert!(cx(3, &[]).completion(0, 3).unwrap().is_void());
        let err = tri.completion(0, 3).unwrap_err();
        assert_eq!(err, Error::CompletionBelowDimension { j: 0, dim: 1 });
        let budget = points.completion_with_budget(0, 3, 5).unwrap_err();
        assert!(matches!(budget, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn induced_and_skeleton_examples() {
        let simplex = cx(3, &[&[0, 1, 2]]);
        assert_eq!(simplex.induced(face(&[0, 1])), cx(3, &[&[0, 1]]));
        let nothing = simplex.induced(Face::EMPTY);
        assert!(!nothing.has_vertex());
        let square = cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(square.induced(face(&[0, 2])), cx(4, &[&[0], &[2]]));

        assert_eq!(
            simplex.skeleton(1).unwrap(),
            cx(3, &[&[0, 1], &[0, 2], &[1, 2]])
        );
        assert_eq!(simplex.skeleton(5).unwrap(), simplex);
        let bottom = simplex.skeleton(-1).unwrap();
        assert_eq!(bottom.num_faces(), 1);
        assert!(simplex.skeleton(-2).is_err());
    }

    #[test]
    fn join_examples() {
        let pair = cx(2, &[&[0], &[1]]);
        let square = pair.join(&pair).unwrap();
        assert_eq!(square, cx(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
        let apex = cx(1, &[&[0]]);
        let cone = square.join(&apex).unwrap();
        assert_eq!(cone.facets().len(), 4);
        assert!(cone.facets().iter().all(|f| f.contains(4)));
        assert!(pair.join(&cx(2, &[])).unwrap().is_void());
    }

    #[test]
    fn nerve_examples() {
        let fam = |members: Vec<SimplicialComplex>| {
            let n = members[0].n_vertices();
            LabeledFamily::new(
                n,
                members
                    .into_iter()
                    .enumerate()
                    .map(|(i, k)| (alloc::format!("K{i}"), k))
                    .collect(),
            )
            .unwrap()
        };
        let two = fam(vec![cx(3, &[&[0, 1]]), cx(3, &[&[1, 2]])]);
        assert_eq!(two.nerve(), cx(2, &[&[0, 1]]));
        let arcs = fam(vec![
            cx(6, &[&[0, 1], &[1, 2]]),
            cx(6, &[&[2, 3], &[3, 4]]),
            cx(6, &[&[4, 5], &[5, 0]]),
        ]);
        assert_eq!(arcs.nerve(), cx(3, &[&[0, 1], &[0, 2], &[1, 2]]));
        let single = fam(vec![cx(2, &[&[0]])]);
        assert_eq!(single.nerve(), cx(1, &[&[0]]));
        assert!(LabeledFamily::new(3, vec![(String::from("a"), cx(4, &[&[0]]))]).is_err());
    }

    #[test]
    fn q_star_examples() {
        let k = tetra_boundary();
        let report = k.q_star(4).unwrap();
        assert!(!report.holds);
        assert_eq!(
            report.violation,
            Some(QStarViolation::TooFewVertices { have: 4 })
        );
        let points = cx(4, &[&[0], &[1], &[2], &[3]]);
        assert!(points.q_star(3).unwrap().holds);
        let report = k.q_star(2).unwrap();
        assert!(report.holds);
        assert_eq!(report.extenders.len(), 6);
        assert!(k.q_star(0).is_err());
        // a path 0-1-2-3: Y = {0, 3} has no common neighbour
        let path = cx(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let report = path.q_star(2).unwrap();
        assert!(!report.holds);
        assert!(matches!(
            report.violation,
            Some(QStarViolation::Uncovered(_))
        ));
    }

    #[test]
    fn colorful_simplex_search() {
        let square = cx(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        let blocks = [face(&[0, 1]), face(&[2, 3])];
        assert_eq!(square.find_colorful_simplex(&blocks), Some(face(&[0, 2])));
        let blocks = [face(&[0]), face(&[1])];
        assert_eq!(square.find_colorful_simplex(&blocks), None);
    }
}
