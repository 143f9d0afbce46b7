use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{cone_rays, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix};

/// Side of every hyperplane; `true` is the positive side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct SignVector(Vec<bool>);

impl SignVector {
    pub fn new(signs: Vec<bool>) -> Self {
        SignVector(signs)
    }

    pub fn all_positive(len: usize) -> Self {
        SignVector(vec![true; len])
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, h: usize) -> bool {
        self.0[h]
    }

    pub fn flipped(&self, h: usize) -> Self {
        let mut s = self.0.clone();
        s[h] = !s[h];
        SignVector(s)
    }

    /// Hyperplane indices where the two sign vectors differ.
    pub fn difference(&self, other: &SignVector) -> Vec<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&s| !s).count()
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(Error::Parse(format!("bad sign character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl From<SignVector> for String {
    fn from(s: SignVector) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for SignVector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        SignVector::parse(&s)
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

/// A chamber of the real complement, with its frame of primitive rays in
/// propagated order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub id: usize,
    pub signs: SignVector,
    pub rays: Vec<Vec<i64>>,
}

impl Chamber {
    /// The frame as a matrix whose columns are the rays.
    pub fn frame(&self) -> Matrix {
        Matrix::from_columns(&self.rays)
    }
}

/// The wall of a chamber opposite one of its rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wall {
    pub hyperplane: usize,
    pub neighbor: usize,
}

/// How the wall-crossing walk orders its work. Any order must produce the
/// same fan; `Shuffled` exists to check that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkOrder {
    Canonical,
    Shuffled(u64),
}

/// All chambers of a simplicial arrangement with their wall adjacency.
///
/// Chamber ids are canonical: sorted by distance from `C+` and then by sign
/// string, so `C+` is chamber 0 regardless of how the walk ran.
/// `walls[c][i]` is the wall of chamber `c` opposite its ray `i`, crossed by
/// the arrow labelled `s_{i+1}`.
#[derive(Debug, Clone)]
pub struct Fan {
    arrangement: Arrangement,
    chambers: Vec<Chamber>,
    walls: Vec<Vec<Wall>>,
    index: HashMap<SignVector, usize>,
}

struct Visit {
    frame: Vec<Vec<i64>>,
    route: Vec<usize>,
    walls: Vec<(usize, SignVector)>,
}

impl Fan {
    pub fn build(arr: &Arrangement) -> Result<Fan> {
        Self::build_with(arr, WalkOrder::Canonical)
    }

    /// Breadth-first wall-crossing walk from the positive orthant. Crossing
    /// the wall opposite ray `i` keeps every other ray in place and puts the
    /// new ray at position `i`; reaching a chamber twice with different
    /// frames is a [`Error::LabelConflict`].
    pub fn build_with(arr: &Arrangement, order: WalkOrder) -> Result<Fan> {
        let n = arr.rank();
        let normals = arr.normals();
        let lines = arr.lines();
        let mut rng = match order {
            WalkOrder::Canonical => None,
            WalkOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        };

        let start = SignVector::all_positive(arr.len());
        let start_frame: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut visits: HashMap<SignVector, Visit> = HashMap::new();
        visits.insert(
            start.clone(),
            Visit { frame: start_frame, route: vec![], walls: vec![] },
        );
        let mut frontier = VecDeque::from([start]);

        while !frontier.is_empty() {
            let signs = match rng.as_mut() {
                Some(r) => {
                    let k = r.gen_range(0..frontier.len());
                    frontier.swap_remove_back(k).expect("index in range")
                }
                None => frontier.pop_front().expect("nonempty"),
            };
            let (frame, route) = {
                let v = &visits[&signs];
                (v.frame.clone(), v.route.clone())
            };
            let mut positions: Vec<usize> = (0..n).collect();
            if let Some(r) = rng.as_mut() {
                positions.shuffle(r);
            }
            let mut walls = vec![None; n];
            for i in positions {
                let h = wall_opposite(&normals, &frame, i, &signs)?;
                let next = signs.flipped(h);
                let rays = cone_rays(&normals, &lines, next.as_slice());
                if rays.len() != n {
                    return Err(Error::NotSimplicial { signs: next.to_string(), rays: rays.len(), rank: n });
                }
                let mut next_frame = frame.clone();
                let fresh: Vec<&Vec<i64>> = rays
                    .iter()
                    .filter(|r| !frame.iter().enumerate().any(|(j, f)| j != i && f == *r))
                    .collect();
                let kept = frame.iter().enumerate().filter(|&(j, _)| j != i).all(|(_, f)| rays.contains(f));
                if !kept || fresh.len() != 1 {
                    return Err(Error::structure(format!(
                        "crossing wall {} of chamber {signs} does not replace exactly one ray",
                        i + 1
                    )));
                }
                next_frame[i] = fresh[0].clone();
                let mut next_route = route.clone();
                next_route.push(i + 1);
                match visits.get(&next) {
                    Some(v) if v.frame != next_frame => {
                        return Err(Error::LabelConflict {
                            signs: next.to_string(),
                            first: v.frame.clone(),
                            first_route: v.route.clone(),
                            second: next_frame,
                            second_route: next_route,
                        });
                    }
                    Some(_) => {}
                    None => {
                        visits.insert(next.clone(), Visit { frame: next_frame, route: next_route, walls: vec![] });
                        frontier.push_back(next.clone());
                    }
                }
                walls[i] = Some((h, next));
            }
            visits.get_mut(&signs).expect("visited").walls =
                walls.into_iter().map(|w| w.expect("every position visited")).collect();
        }

        let mut order: Vec<SignVector> = visits.keys().cloned().collect();
        order.sort_by(|a, b| a.negatives().cmp(&b.negatives()).then_with(|| a.to_string().cmp(&b.to_string())));
        let index: HashMap<SignVector, usize> = order.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut chambers = Vec::with_capacity(order.len());
        let mut all_walls = Vec::with_capacity(order.len());
        for (id, signs) in order.into_iter().enumerate() {
            let v = visits.remove(&signs).expect("visited");
            all_walls.push(
                v.walls
                    .iter()
                    .map(|(h, s)| Wall { hyperplane: *h, neighbor: index[s] })
                    .collect(),
            );
            chambers.push(Chamber { id, signs, rays: v.frame });
        }
        Ok(Fan { arrangement: arr.clone(), chambers, walls: all_walls, index })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn rank(&self) -> usize {
        self.arrangement.rank()
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, id: usize) -> &Chamber {
        &self.chambers[id]
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn walls(&self, id: usize) -> &[Wall] {
        &self.walls[id]
    }

    pub fn find(&self, signs: &SignVector) -> Option<usize> {
        self.index.get(signs).copied()
    }

    pub fn into_chambers(self) -> Vec<Chamber> {
        self.chambers
    }
}

/// The unique hyperplane containing all rays of `frame` except ray `i`.
fn wall_opposite(normals: &[Vec<i64>], frame: &[Vec<i64>], i: usize, signs: &SignVector) -> Result<usize> {
    let mut found = normals
        .iter()
        .enumerate()
        .filter(|(_, h)| frame.iter().enumerate().all(|(j, r)| j == i || dot(h, r) == 0));
    match (found.next(), found.next()) {
        (Some((k, _)), None) => Ok(k),
        _ => Err(Error::structure(format!("chamber {signs} has no unique wall opposite ray {}", i + 1))),
    }
}

/// All chambers, `C+` first, each with its propagated frame.
pub fn enumerate_chambers(arr: &Arrangement) -> Result<Vec<Chamber>> {
    Fan::build(arr).map(Fan::into_chambers)
}

/// Walks the chamber graph without assuming simpliciality and reports
/// whether every chamber has exactly `rank` extreme rays.
pub fn is_simplicial(arr: &Arrangement) -> bool {
    let n = arr.rank();
    let normals = arr.normals();
    let lines = arr.lines();
    let start = SignVector::all_positive(arr.len());
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut simplicial = true;
    while let Some(signs) = queue.pop_front() {
        let rays = cone_rays(&normals, &lines, signs.as_slice());
        simplicial &= rays.len() == n;
        for (h, normal) in normals.iter().enumerate() {
            let on: Vec<Vec<i64>> = rays.iter().filter(|r| dot(normal, r) == 0).cloned().collect();
            if linalg::rank_of_rows(&on) == n - 1 {
                let next = signs.flipped(h);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    simplicial
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_coxeter_arrangement, cd4_arrangement, rank2_arrangement, ArrangementKind, CoxeterType};

    #[test]
    fn cd4_has_eight_chambers_with_frames() {
        let fan = Fan::build(&cd4_arrangement()).unwrap();
        assert_eq!(fan.len(), 8);
        assert_eq!(fan.chamber(0).rays, vec![vec![1, 0], vec![0, 1]]);
        // crossing s1 replaces e1 by (-1,1); crossing s2 replaces e2 by (2,-1)
        let c1 = fan.chamber(fan.walls(0)[0].neighbor);
        assert_eq!(c1.rays, vec![vec![-1, 1], vec![0, 1]]);
        let c2 = fan.chamber(fan.walls(0)[1].neighbor);
        assert_eq!(c2.rays, vec![vec![1, 0], vec![2, -1]]);
        let anti = fan.find(&SignVector::parse("----").unwrap()).unwrap();
        assert_eq!(fan.chamber(anti).rays, vec![vec![-1, 0], vec![0, -1]]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_chambers(&build_coxeter_arrangement(CoxeterType::A, 1).unwrap()).unwrap().len(), 2);
        assert_eq!(enumerate_chambers(&build_coxeter_arrangement(CoxeterType::A, 2).unwrap()).unwrap().len(), 6);
        assert_eq!(enumerate_chambers(&build_coxeter_arrangement(CoxeterType::A, 3).unwrap()).unwrap().len(), 24);
        for m in 2..=8 {
            assert_eq!(enumerate_chambers(&rank2_arrangement(m).unwrap()).unwrap().len(), 2 * m);
        }
    }

    #[test]
    fn shuffled_walks_agree() {
        let arr = build_coxeter_arrangement(CoxeterType::A, 3).unwrap();
        let base = Fan::build(&arr).unwrap();
        for seed in 0..5 {
            let other = Fan::build_with(&arr, WalkOrder::Shuffled(seed)).unwrap();
            assert_eq!(base.chambers(), other.chambers());
            assert_eq!(base.walls, other.walls);
        }
    }

    #[test]
    fn non_simplicial_detected() {
        let arr = crate::arrangement::Arrangement::new(
            3,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]],
            ArrangementKind::Custom,
        )
        .unwrap();
        assert!(!is_simplicial(&arr));
        assert!(matches!(enumerate_chambers(&arr), Err(Error::NotSimplicial { .. })));
        assert!(is_simplicial(&cd4_arrangement()));
    }

    #[test]
    fn sign_vector_text() {
        let s = SignVector::parse("+-+").unwrap();
        assert_eq!(s.to_string(), "+-+");
        assert_eq!(s.flipped(1).to_string(), "+++");
        assert_eq!(s.difference(&SignVector::all_positive(3)), vec![1]);
        assert!(SignVector::parse("+x").is_err());
    }
}
