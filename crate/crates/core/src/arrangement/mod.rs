//! Central integer hyperplane arrangements whose base chamber is the
//! positive orthant.

mod chambers;
mod restrict;
mod roots;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix};

pub use chambers::{enumerate_chambers, is_simplicial, Chamber, Fan, SignVector, Wall, WalkOrder};
pub use restrict::restrict_to_flat;
pub use roots::{build_coxeter_arrangement, build_coxeter_arrangement_with_ceiling, cartan_matrix, positive_roots, CoxeterType};

/// Default maximum rank accepted by the Coxeter constructors.
pub const DEFAULT_RANK_CEILING: usize = 4;

/// A linear hyperplane `{x : normal . x = 0}` with a canonical normal:
/// primitive, first nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<i64>,
}

impl Hyperplane {
    pub fn new(normal: &[i64]) -> Result<Self> {
        let normal = linalg::primitive_canonical(normal)
            .ok_or_else(|| Error::validation("hyperplane normal is zero"))?;
        Ok(Hyperplane { normal })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        dot(&self.normal, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ArrangementKind {
    Coxeter { ty: CoxeterType, rank: usize },
    Restriction,
    Rank2,
    Custom,
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementKind::Coxeter { ty, rank } => write!(f, "coxeter-{ty}{rank}"),
            ArrangementKind::Restriction => f.write_str("restriction"),
            ArrangementKind::Rank2 => f.write_str("rank2"),
            ArrangementKind::Custom => f.write_str("custom"),
        }
    }
}

impl FromStr for ArrangementKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "restriction" => Ok(ArrangementKind::Restriction),
            "rank2" => Ok(ArrangementKind::Rank2),
            "custom" => Ok(ArrangementKind::Custom),
            _ => {
                let rest = s
                    .strip_prefix("coxeter-")
                    .ok_or_else(|| Error::Parse(format!("unknown arrangement kind {s:?}")))?;
                let (ty, rank) = rest.split_at(1);
                let ty: CoxeterType = ty.parse()?;
                let rank = rank
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad Coxeter rank in kind {s:?}")))?;
                Ok(ArrangementKind::Coxeter { ty, rank })
            }
        }
    }
}

impl From<ArrangementKind> for String {
    fn from(k: ArrangementKind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for ArrangementKind {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A central, essential arrangement in rank `n` whose positive orthant is a
/// chamber.
///
/// The orthant convention holds iff every normal is sign-coherent (all
/// entries of one sign) and every coordinate hyperplane `x_i = 0` is present.
/// Both are checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "crate::io::ArrangementFile", try_from = "crate::io::ArrangementFile")]
pub struct Arrangement {
    rank: usize,
    hyperplanes: Vec<Hyperplane>,
    kind: ArrangementKind,
    /// For restrictions: columns are the ambient coordinates of the new
    /// basis vectors.
    embedding: Option<Matrix>,
}

impl Arrangement {
    pub fn new(rank: usize, normals: &[Vec<i64>], kind: ArrangementKind) -> Result<Self> {
        if rank == 0 {
            return Err(Error::validation("rank must be positive"));
        }
        let mut seen = BTreeSet::new();
        let mut hyperplanes = Vec::with_capacity(normals.len());
        for (k, n) in normals.iter().enumerate() {
            if n.len() != rank {
                return Err(Error::validation(format!(
                    "normals[{k}] has length {}, expected {rank}",
                    n.len()
                )));
            }
            let h = Hyperplane::new(n).map_err(|_| Error::validation(format!("normals[{k}] is zero")))?;
            if h.normal.iter().any(|&x| x < 0) {
                return Err(Error::validation(format!(
                    "normals[{k}] = {n:?} meets the interior of the positive orthant"
                )));
            }
            if !seen.insert(h.clone()) {
                return Err(Error::validation(format!("normals[{k}] duplicates an earlier hyperplane")));
            }
            hyperplanes.push(h);
        }
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if !seen.contains(&Hyperplane { normal: e }) {
                return Err(Error::validation(format!(
                    "coordinate hyperplane x{} = 0 is missing, so the positive orthant is not a chamber",
                    i + 1
                )));
            }
        }
        Ok(Arrangement { rank, hyperplanes, kind, embedding: None })
    }

    pub(crate) fn with_embedding(mut self, embedding: Matrix) -> Self {
        self.embedding = Some(embedding);
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn kind(&self) -> &ArrangementKind {
        &self.kind
    }

    pub fn embedding(&self) -> Option<&Matrix> {
        self.embedding.as_ref()
    }

    pub fn normals(&self) -> Vec<Vec<i64>> {
        self.hyperplanes.iter().map(|h| h.normal.clone()).collect()
    }

    /// Short human-readable descriptor.
    pub fn descriptor(&self) -> String {
        format!("{}(rank {}, {} hyperplanes)", self.kind, self.rank, self.len())
    }

    /// The rank-one flats, as canonical primitive direction vectors.
    pub fn lines(&self) -> Vec<Vec<i64>> {
        lines_of(&self.normals(), self.rank)
    }
}

/// Rank-one flats of the arrangement with the given normals: every line cut
/// out by `rank - 1` independent hyperplanes.
pub(crate) fn lines_of(normals: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    fn rec(
        normals: &[Vec<i64>],
        rank: usize,
        start: usize,
        chosen: &mut Vec<Vec<i64>>,
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if chosen.len() == rank - 1 {
            let k = linalg::integer_kernel(chosen, rank);
            debug_assert_eq!(k.len(), 1);
            out.insert(linalg::primitive_canonical(&k[0]).expect("kernel vector is nonzero"));
            return;
        }
        for i in start..normals.len() {
            chosen.push(normals[i].clone());
            if linalg::rank_of_rows(chosen) == chosen.len() {
                rec(normals, rank, i + 1, chosen, out);
            }
            chosen.pop();
        }
    }
    rec(normals, rank, 0, &mut chosen, &mut out);
    out.into_iter().collect()
}

/// Extreme rays of the closed cone `{x : s_h (h . x) >= 0}`, given the
/// rank-one flats of the arrangement. A line direction lying in the closed
/// cone is always extreme: the tight constraints at it have rank `n - 1`.
pub(crate) fn cone_rays(normals: &[Vec<i64>], lines: &[Vec<i64>], signs: &[bool]) -> Vec<Vec<i64>> {
    let inside = |v: &[i64]| {
        normals.iter().zip(signs).all(|(h, &s)| {
            let d = dot(h, v);
            if s {
                d >= 0
            } else {
                d <= 0
            }
        })
    };
    let mut rays = Vec::new();
    for l in lines {
        if inside(l) {
            rays.push(l.clone());
        }
        let neg: Vec<i64> = l.iter().map(|x| -x).collect();
        if inside(&neg) {
            rays.push(neg);
        }
    }
    rays
}

/// The rank-2 arrangement with normals `(1,0), (0,1), (1,1), ..., (1,m-2)`.
///
/// Consecutive rays `(0,1), (-1,1), ..., (-(m-2),1), (-1,0)` of the upper
/// half-plane pairwise form unimodular frames, so every chamber frame is a
/// lattice basis. `m = 4` gives the two-curve cD4 arrangement.
pub fn rank2_arrangement(m: usize) -> Result<Arrangement> {
    if m < 2 {
        return Err(Error::validation(format!("rank2_arrangement needs m >= 2, got {m}")));
    }
    let mut normals = vec![vec![1, 0], vec![0, 1]];
    normals.extend((1..=(m as i64 - 2)).map(|k| vec![1, k]));
    Arrangement::new(2, &normals, ArrangementKind::Rank2)
}

/// The arrangement of the two-curve cD4 flop: lines at 0, 90, 135 and
/// 153.435 degrees.
pub fn cd4_arrangement() -> Arrangement {
    Arrangement::new(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]], ArrangementKind::Rank2)
        .expect("cD4 normals are valid")
}
