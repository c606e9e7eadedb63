//! JSON documents: point families, explicit complexes and labeled families
//! of complexes. Coordinates are exact; rationals travel as `"p/q"` strings
//! and plain JSON integers are accepted on input.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, ensure, Context};
use gpreps_core::{LabeledFamily, Point, PointFamily, PointMultiset, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    pub fn parse(&self) -> anyhow::Result<BigRational> {
        match self {
            Coord::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Coord::Text(s) => parse_rational(s),
        }
    }

    pub fn canonical(value: &BigRational) -> Self {
        Coord::Text(value.to_string())
    }
}

pub fn parse_rational(text: &str) -> anyhow::Result<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .with_context(|| format!("bad numerator in {text:?}"))?;
    let den: BigInt = den
        .parse()
        .with_context(|| format!("bad denominator in {text:?}"))?;
    ensure!(!den.is_zero(), "zero denominator in {text:?}");
    Ok(BigRational::new(num, den))
}

pub fn point_coords(p: &Point) -> Vec<Coord> {
    p.coords().iter().map(Coord::canonical).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub d: usize,
    pub sets: Vec<Vec<Vec<Coord>>>,
}

impl FamilyDocument {
    pub fn to_family(&self) -> anyhow::Result<PointFamily> {
        ensure!(self.d >= 1, "dimension d must be at least 1");
        ensure!(!self.sets.is_empty(), "the family has no sets");
        let mut sets = Vec::with_capacity(self.sets.len());
        for (i, set) in self.sets.iter().enumerate() {
            let mut points = Vec::with_capacity(set.len());
            for (j, coords) in set.iter().enumerate() {
                ensure!(
                    coords.len() == self.d,
                    "set {i}, point {j}: {} coordinates, expected d = {}",
                    coords.len(),
                    self.d
                );
                let parsed = coords
                    .iter()
                    .map(Coord::parse)
                    .collect::<anyhow::Result<Vec<_>>>()
                    .with_context(|| format!("set {i}, point {j}"))?;
                points.push(Point::new(parsed));
            }
            sets.push(PointMultiset::new(self.d, points)?);
        }
        Ok(PointFamily::new(self.d, sets)?)
    }

    pub fn from_family(family: &PointFamily) -> Self {
        FamilyDocument {
            d: family.dim(),
            sets: family
                .sets()
                .iter()
                .map(|s| s.iter().map(point_coords).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexDocument {
    pub fn to_complex(&self) -> anyhow::Result<SimplicialComplex> {
        Ok(SimplicialComplex::closure(self.n_vertices, &self.facets)?)
    }

    /// Facets in the complex's face order (by size, then lexicographic).
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexDocument {
            n_vertices: k.n_vertices(),
            facets: k
                .facets()
                .into_iter()
                .map(|f| f.vertices().collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDocument {
    pub label: String,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NerveDocument {
    pub n_vertices: usize,
    pub members: Vec<MemberDocument>,
}

impl NerveDocument {
    pub fn to_family(&self) -> anyhow::Result<LabeledFamily> {
        let members = self
            .members
            .iter()
            .map(|m| {
                let k = SimplicialComplex::closure(self.n_vertices, &m.facets)
                    .with_context(|| format!("member {:?}", m.label))?;
                Ok((m.label.clone(), k))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(LabeledFamily::new(self.n_vertices, members)?)
    }
}

/// Read a whole input file, or standard input for `-`.
pub fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

pub fn parse_document<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> anyhow::Result<T> {
    match serde_json::from_str(text) {
        Ok(doc) => Ok(doc),
        Err(e) => bail!("not a valid {what} document: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coord_strategy() -> impl Strategy<Value = Coord> {
        prop_oneof![
            (-50i64..50).prop_map(Coord::Int),
            (-50i64..50, 1i64..20).prop_map(|(n, d)| Coord::Text(format!("{n}/{d}"))),
        ]
    }

    fn family_doc_strategy() -> impl Strategy<Value = FamilyDocument> {
        (1usize..=3).prop_flat_map(|d| {
            let point = prop::collection::vec(coord_strategy(), d);
            let set = prop::collection::vec(point, 1..=4);
            prop::collection::vec(set, 1..=4).prop_map(move |sets| FamilyDocument { d, sets })
        })
    }

    proptest! {
        #[test]
        fn family_round_trip_is_canonical(doc in family_doc_strategy()) {
            let canonical = FamilyDocument::from_family(&doc.to_family().unwrap());
            let text = serde_json::to_string(&canonical).unwrap();
            let reparsed: FamilyDocument = parse_document(&text, "family").unwrap();
            prop_assert_eq!(&reparsed, &canonical);
            prop_assert_eq!(FamilyDocument::from_family(&reparsed.to_family().unwrap()), canonical);
        }

        #[test]
        fn complex_round_trip_is_canonical(
            n in 1usize..=8,
            facets in prop::collection::vec(prop::collection::btree_set(0usize..8, 0..=4), 0..=5),
        ) {
            let facets: Vec<Vec<usize>> =
                facets.into_iter().map(|f| f.into_iter().filter(|&v| v < n).collect()).collect();
            let k = ComplexDocument { n_vertices: n, facets }.to_complex().unwrap();
            let canonical = ComplexDocument::from_complex(&k);
            let text = serde_json::to_string(&canonical).unwrap();
            let reparsed: ComplexDocument = parse_document(&text, "complex").unwrap();
            prop_assert_eq!(&reparsed, &canonical);
            prop_assert_eq!(reparsed.to_complex().unwrap(), k);
        }
    }

    #[test]
    fn rationals_parse_and_normalize() {
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("-6/3").unwrap().to_string(), "-2");
        assert_eq!(parse_rational(" 7 ").unwrap().to_string(), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn family_document_accepts_integers_and_strings() {
        let doc: FamilyDocument =
            serde_json::from_str(r#"{"d":2,"sets":[[["0",0],[1,"1/2"]],[["3/3","-2/4"]]]}"#)
                .unwrap();
        let family = doc.to_family().unwrap();
        assert_eq!(family.len(), 2);
        let back = FamilyDocument::from_family(&family);
        let text = serde_json::to_string(&back).unwrap();
        assert_eq!(
            text,
            r#"{"d":2,"sets":[[["0","0"],["1","1/2"]],[["1","-1/2"]]]}"#
        );
    }

    #[test]
    fn short_coordinate_vectors_are_rejected() {
        let doc: FamilyDocument = serde_json::from_str(r#"{"d":2,"sets":[[["0"]]]}"#).unwrap();
        let err = doc.to_family().unwrap_err().to_string();
        assert!(err.contains("expected d = 2"), "{err}");
    }

    #[test]
    fn floats_are_not_coordinates() {
        let parsed: Result<FamilyDocument, _> = serde_json::from_str(r#"{"d":1,"sets":[[[0.5]]]}"#);
        assert!(parsed.is_err());
    }

    #[test]
    fn complex_document_round_trip() {
        let doc = ComplexDocument {
            n_vertices: 4,
            facets: vec![vec![0, 3], vec![0, 1, 2]],
        };
        let k = doc.to_complex().unwrap();
        let canonical = ComplexDocument::from_complex(&k);
        assert_eq!(canonical.facets, vec![vec![0, 3], vec![0, 1, 2]]);
        assert_eq!(canonical.to_complex().unwrap(), k);
    }
}
