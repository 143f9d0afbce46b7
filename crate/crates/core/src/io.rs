//! Stable JSON formats and text parsers.
//!
//! * arrangement: `{"rank", "normals", "kind", "embedding"?}`
//! * complex point: `[[re_num, re_den, im_num, im_den], ...]`; integers that
//!   do not fit in 64 bits are written as decimal strings
//! * word: `{"source", "letters": [[arrow, exponent], ...]}`, or as text
//!   `"3 17^-1 5"`
//! * stability point: `{"base": word, "charge": complex point}`
//! * presentation: `{"generators": [names], "relations": [[signed indices]]}`
//! * polyline: an array of complex points

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, DeserializeOwned};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrangement::{Arrangement, ArrangementKind};
use crate::cover::{ComplexPoint, StabilityPoint};
use crate::error::{Error, Result};
use crate::graph::{ArrowId, ChamberId, PositivePath, SkeletonGraph};
use crate::groupoid::{GroupoidWord, Letter, Presentation};
use crate::linalg::Matrix;

/// Version stamped into every report.
pub const SCHEMA_VERSION: u32 = 1;

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable values")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub rank: usize,
    pub normals: Vec<Vec<i64>>,
    pub kind: ArrangementKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Matrix>,
}

impl From<Arrangement> for ArrangementFile {
    fn from(a: Arrangement) -> Self {
        ArrangementFile {
            rank: a.rank(),
            normals: a.normals(),
            kind: a.kind().clone(),
            embedding: a.embedding().cloned(),
        }
    }
}

impl TryFrom<ArrangementFile> for Arrangement {
    type Error = Error;

    fn try_from(f: ArrangementFile) -> Result<Self> {
        let a = Arrangement::new(f.rank, &f.normals, f.kind)?;
        Ok(match f.embedding {
            Some(e) => a.with_embedding(e),
            None => a,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Int {
    fn from(b: &BigInt) -> Self {
        b.to_i64().map_or_else(|| Int::Big(b.to_string()), Int::Small)
    }
}

impl TryFrom<Int> for BigInt {
    type Error = String;

    fn try_from(i: Int) -> std::result::Result<Self, String> {
        match i {
            Int::Small(v) => Ok(v.into()),
            Int::Big(s) => s.parse().map_err(|_| format!("{s:?} is not an integer")),
        }
    }
}

impl Serialize for ComplexPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coords: Vec<[Int; 4]> = self
            .coords()
            .iter()
            .map(|c| [c.re.numer().into(), c.re.denom().into(), c.im.numer().into(), c.im.denom().into()])
            .collect();
        coords.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<[Int; 4]> = Vec::deserialize(d)?;
        let mut coords = Vec::with_capacity(raw.len());
        for (k, [a, b, c, e]) in raw.into_iter().enumerate() {
            let parts: Vec<BigInt> = [a, b, c, e]
                .into_iter()
                .map(BigInt::try_from)
                .collect::<std::result::Result<_, _>>()
                .map_err(de::Error::custom)?;
            if parts[1].is_zero() || parts[3].is_zero() {
                return Err(de::Error::custom(format!("coordinate {k} has a zero denominator")));
            }
            coords.push(Complex::new(
                BigRational::new(parts[0].clone(), parts[1].clone()),
                BigRational::new(parts[2].clone(), parts[3].clone()),
            ));
        }
        Ok(ComplexPoint::new(coords))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFile {
    pub source: ChamberId,
    pub letters: Vec<(ArrowId, i64)>,
}

impl From<&GroupoidWord> for WordFile {
    fn from(w: &GroupoidWord) -> Self {
        WordFile { source: w.source(), letters: w.letters().iter().map(|l| (l.arrow, l.exponent())).collect() }
    }
}

impl WordFile {
    pub fn into_word(self, graph: &SkeletonGraph) -> Result<GroupoidWord> {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(k, &(a, e))| match e {
                1 => Ok(Letter::fwd(a)),
                -1 => Ok(Letter::back(a)),
                _ => Err(Error::validation(format!("letters[{k}]: exponent {e} is not 1 or -1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        GroupoidWord::new(graph, self.source, letters)
    }
}

/// Parses `"3 17^-1 5"`. The source defaults to the start of the first
/// letter; an empty word needs `source`.
pub fn parse_word(graph: &SkeletonGraph, text: &str, source: Option<ChamberId>) -> Result<GroupoidWord> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            let (a, forward) = match tok.split_once('^') {
                None => (tok, true),
                Some((a, "1")) => (a, true),
                Some((a, "-1")) => (a, false),
                Some(_) => return Err(Error::Parse(format!("bad exponent in {tok:?}"))),
            };
            let arrow = a.parse().map_err(|_| Error::Parse(format!("bad arrow id in {tok:?}")))?;
            Ok(Letter { arrow, forward })
        })
        .collect::<Result<Vec<_>>>()?;
    match source {
        Some(s) => GroupoidWord::new(graph, s, letters),
        None => GroupoidWord::from_letters(graph, letters),
    }
}

/// Parses whitespace-separated arrow ids.
pub fn parse_path(graph: &SkeletonGraph, text: &str, source: Option<ChamberId>) -> Result<PositivePath> {
    let arrows = text
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad arrow id {t:?}"))))
        .collect::<Result<Vec<ArrowId>>>()?;
    let source = match (source, arrows.first()) {
        (Some(s), _) => s,
        (None, Some(&a)) => graph
            .try_arrow(a)
            .ok_or_else(|| Error::validation(format!("arrow {a} does not exist")))?
            .source,
        (None, None) => return Err(Error::validation("an empty path needs an explicit chamber")),
    };
    PositivePath::new(graph, source, arrows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityFile {
    pub base: WordFile,
    pub charge: ComplexPoint,
}

impl From<&StabilityPoint> for StabilityFile {
    fn from(s: &StabilityPoint) -> Self {
        StabilityFile { base: s.base().into(), charge: s.charge().clone() }
    }
}

impl StabilityFile {
    pub fn into_point(self, graph: &SkeletonGraph) -> Result<StabilityPoint> {
        let base = self.base.into_word(graph)?;
        StabilityPoint::new(graph, base, self.charge)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<i64>>,
}

impl From<&Presentation> for PresentationFile {
    fn from(p: &Presentation) -> Self {
        PresentationFile {
            generators: p.generators.iter().map(|g| g.name.clone()).collect(),
            relations: p.relations.clone(),
        }
    }
}
