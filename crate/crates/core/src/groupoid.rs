//! The category of positive paths and its groupoid completion.
//!
//! Relations come from codimension-2 faces: for a chamber `C` and two of its
//! walls, the two minimal galleries from `C` around the face to the opposite
//! chamber are identified. These are exactly the 2-cells of the Salvetti
//! complex, so they present both the positive category and the groupoid.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ArrowId, ChamberId, PositivePath, SkeletonGraph};
use crate::ktheory::KTheory;
use crate::linalg::smith_invariants;

/// One letter of a groupoid word: an arrow traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub forward: bool,
}

impl Letter {
    pub fn fwd(arrow: ArrowId) -> Self {
        Letter { arrow, forward: true }
    }

    pub fn back(arrow: ArrowId) -> Self {
        Letter { arrow, forward: false }
    }

    pub fn exponent(&self) -> i64 {
        if self.forward {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { arrow: self.arrow, forward: !self.forward }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.forward {
            write!(f, "{}", self.arrow)
        } else {
            write!(f, "{}^-1", self.arrow)
        }
    }
}

/// A morphism of the Deligne groupoid, as a composable word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupoidWord {
    source: ChamberId,
    target: ChamberId,
    letters: Vec<Letter>,
}

impl GroupoidWord {
    pub fn empty(at: ChamberId) -> Self {
        GroupoidWord { source: at, target: at, letters: vec![] }
    }

    pub fn new(graph: &SkeletonGraph, source: ChamberId, letters: Vec<Letter>) -> Result<Self> {
        if source >= graph.num_chambers() {
            return Err(Error::validation(format!("chamber {source} does not exist")));
        }
        let mut at = source;
        for (k, l) in letters.iter().enumerate() {
            let a = graph
                .try_arrow(l.arrow)
                .ok_or_else(|| Error::validation(format!("arrow {} does not exist", l.arrow)))?;
            let (from, to) = if l.forward { (a.source, a.target) } else { (a.target, a.source) };
            if from != at {
                return Err(Error::validation(format!(
                    "letter {l} at position {k} starts at chamber {from} but the word is at {at}"
                )));
            }
            at = to;
        }
        Ok(GroupoidWord { source, target: at, letters })
    }

    /// Like [`GroupoidWord::new`] with the source read off the first letter.
    pub fn from_letters(graph: &SkeletonGraph, letters: Vec<Letter>) -> Result<Self> {
        let Some(first) = letters.first() else {
            return Err(Error::validation("an empty word needs an explicit chamber"));
        };
        let a = graph
            .try_arrow(first.arrow)
            .ok_or_else(|| Error::validation(format!("arrow {} does not exist", first.arrow)))?;
        let source = if first.forward { a.source } else { a.target };
        Self::new(graph, source, letters)
    }

    pub fn from_path(graph: &SkeletonGraph, p: &PositivePath) -> Self {
        GroupoidWord {
            source: p.source(),
            target: p.target(graph),
            letters: p.arrows().iter().map(|&a| Letter::fwd(a)).collect(),
        }
    }

    pub fn source(&self) -> ChamberId {
        self.source
    }

    pub fn target(&self) -> ChamberId {
        self.target
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.forward)
    }

    pub fn inverse(&self) -> Self {
        GroupoidWord {
            source: self.target,
            target: self.source,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` then `other`.
    pub fn then(&self, other: &GroupoidWord) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::validation(format!(
                "cannot compose: word ends at {} but the next starts at {}",
                self.target, other.source
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(GroupoidWord { source: self.source, target: other.target, letters })
    }

    /// Cancels adjacent `a a^-1` and `a^-1 a`.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupoidWord { source: self.source, target: self.target, letters: out }
    }
}

impl fmt::Display for GroupoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WordVerdict {
    Equal,
    Distinct,
    Unknown,
}

impl fmt::Display for WordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordVerdict::Equal => "equal",
            WordVerdict::Distinct => "distinct",
            WordVerdict::Unknown => "unknown",
        })
    }
}

/// The two minimal galleries around one codimension-2 face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRelation {
    pub chamber: ChamberId,
    pub opposite: ChamberId,
    pub left: Vec<ArrowId>,
    pub right: Vec<ArrowId>,
}

/// A generator of the vertex group at `C+`: tree path, one arrow, tree path
/// back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub arrow: ArrowId,
    pub word: GroupoidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    /// Words in the generators, as signed 1-based indices.
    pub relations: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl Abelianization {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl Presentation {
    /// Smith normal form of the relation matrix.
    pub fn abelianization(&self) -> Abelianization {
        let g = self.generators.len();
        let rows: Vec<Vec<i64>> = self
            .relations
            .iter()
            .map(|r| {
                let mut row = vec![0; g];
                for &s in r {
                    row[s.unsigned_abs() as usize - 1] += s.signum();
                }
                row
            })
            .collect();
        let inv = smith_invariants(&rows, g);
        Abelianization {
            free_rank: g - inv.len(),
            torsion: inv.into_iter().filter(|&d| d != 1).collect(),
        }
    }

    /// The loop at `C+` spelled by a word in the generators.
    pub fn evaluate(&self, relation: &[i64]) -> GroupoidWord {
        let mut w = GroupoidWord::empty(0);
        for &s in relation {
            let g = &self.generators[s.unsigned_abs() as usize - 1].word;
            let piece = if s > 0 { g.clone() } else { g.inverse() };
            w = w.then(&piece).expect("generators are loops at the base chamber");
        }
        w
    }
}

/// Positive-path and groupoid operations over one skeleton.
#[derive(Debug, Clone)]
pub struct Groupoid<'g> {
    graph: &'g SkeletonGraph,
    kt: KTheory<'g>,
    faces: Vec<FaceRelation>,
    /// Rewrite rules `lhs -> rhs`, indexed by the first arrow of `lhs`.
    rules: Vec<Vec<(Vec<ArrowId>, Vec<ArrowId>)>>,
}

impl<'g> Groupoid<'g> {
    pub fn new(graph: &'g SkeletonGraph) -> Result<Self> {
        let kt = KTheory::new(graph)?;
        let n = graph.rank();
        let mut faces = Vec::new();
        let mut rules = vec![Vec::new(); graph.arrows().len()];
        for c in graph.chambers() {
            for i in 0..n {
                for j in i + 1..n {
                    let (d, _) = graph.opposite_across_face(c.id, i, j);
                    let side = |k: usize| {
                        let a = c.id * n + k;
                        let mut g = vec![a];
                        g.extend_from_slice(graph.minimal_gallery(graph.arrow(a).target, d).arrows());
                        g
                    };
                    let (left, right) = (side(i), side(j));
                    rules[left[0]].push((left.clone(), right.clone()));
                    rules[right[0]].push((right.clone(), left.clone()));
                    faces.push(FaceRelation { chamber: c.id, opposite: d, left, right });
                }
            }
        }
        Ok(Groupoid { graph, kt, faces, rules })
    }

    pub fn graph(&self) -> &'g SkeletonGraph {
        self.graph
    }

    pub fn ktheory(&self) -> &KTheory<'g> {
        &self.kt
    }

    pub fn face_relations(&self) -> &[FaceRelation] {
        &self.faces
    }

    /// Decides `p ~ q` in the positive category by closing the class of `p`
    /// under single rewrites.
    pub fn positive_path_equal(&self, p: &PositivePath, q: &PositivePath) -> Result<bool> {
        self.check_endpoints(p, q)?;
        Ok(self.closure_search(p.arrows(), q.arrows(), usize::MAX).expect("unbounded search always decides"))
    }

    /// As [`Groupoid::positive_path_equal`], giving up (`None`) after
    /// `budget` visited paths.
    pub fn positive_path_equal_bounded(&self, p: &PositivePath, q: &PositivePath, budget: usize) -> Result<Option<bool>> {
        self.check_endpoints(p, q)?;
        Ok(self.closure_search(p.arrows(), q.arrows(), budget))
    }

    fn check_endpoints(&self, p: &PositivePath, q: &PositivePath) -> Result<()> {
        if p.source() != q.source() || p.target(self.graph) != q.target(self.graph) {
            return Err(Error::validation(format!(
                "paths have endpoints {}->{} and {}->{}",
                p.source(),
                p.target(self.graph),
                q.source(),
                q.target(self.graph)
            )));
        }
        Ok(())
    }

    fn crossing_counts(&self, arrows: &[ArrowId]) -> Vec<usize> {
        let mut counts = vec![0; self.graph.arrangement().len()];
        for &a in arrows {
            counts[self.graph.arrow(a).hyperplane] += 1;
        }
        counts
    }

    fn closure_search(&self, p: &[ArrowId], q: &[ArrowId], budget: usize) -> Option<bool> {
        if p == q {
            return Some(true);
        }
        // every rule preserves length and the multiset of crossed hyperplanes
        if p.len() != q.len() || self.crossing_counts(p) != self.crossing_counts(q) {
            return Some(false);
        }
        let mut seen: HashSet<Vec<ArrowId>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(p.to_vec());
        queue.push_back(p.to_vec());
        while let Some(cur) = queue.pop_front() {
            for next in self.rewrites(&cur) {
                if next == q {
                    return Some(true);
                }
                if seen.insert(next.clone()) {
                    if seen.len() > budget {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
        Some(false)
    }

    /// Every path obtained from `path` by one face-relation rewrite.
    pub fn rewrites(&self, path: &[ArrowId]) -> Vec<Vec<ArrowId>> {
        let mut out = Vec::new();
        for k in 0..path.len() {
            for (lhs, rhs) in &self.rules[path[k]] {
                if path.len() - k < lhs.len() || path[k..k + lhs.len()] != lhs[..] {
                    continue;
                }
                let mut next = path[..k].to_vec();
                next.extend_from_slice(rhs);
                next.extend_from_slice(&path[k + lhs.len()..]);
                out.push(next);
            }
        }
        out
    }

    /// Signed count of crossings of each hyperplane. Invariant under the
    /// relations and under free reduction, so it factors through the
    /// abelianization of the groupoid.
    pub fn abelian_image(&self, w: &GroupoidWord) -> Vec<i64> {
        let mut v = vec![0; self.graph.arrangement().len()];
        for l in w.letters() {
            v[self.graph.arrow(l.arrow).hyperplane] += l.exponent();
        }
        v
    }

    /// Bounded word problem. `budget` caps reversing steps plus paths visited
    /// by the final positive comparison.
    pub fn groupoid_word_equal(&self, u: &GroupoidWord, v: &GroupoidWord, budget: usize) -> Result<WordVerdict> {
        if u.source() != v.source() || u.target() != v.target() {
            return Err(Error::validation(format!(
                "words have endpoints {}->{} and {}->{}",
                u.source(),
                u.target(),
                v.source(),
                v.target()
            )));
        }
        let (u, v) = (u.free_reduce(), v.free_reduce());
        if u == v {
            return Ok(WordVerdict::Equal);
        }
        if self.kt.f_along_word(&u).entries != self.kt.f_along_word(&v).entries {
            return Ok(WordVerdict::Distinct);
        }
        if self.abelian_image(&u) != self.abelian_image(&v) {
            return Ok(WordVerdict::Distinct);
        }
        let lp = u.then(&v.inverse()).expect("endpoints checked").free_reduce();
        let Some((pos, neg, used)) = self.reverse_to_fraction(&lp, budget) else {
            return Ok(WordVerdict::Unknown);
        };
        match self.closure_search(&pos, &neg, budget - used) {
            Some(true) => Ok(WordVerdict::Equal),
            _ => Ok(WordVerdict::Unknown),
        }
    }

    /// Rewrites `x^-1 y` into `x' y'^-1` until the word is positive followed
    /// by negative, using `x x' = y y'` with both sides minimal galleries
    /// around the face of `x` and `y`. Returns the positive part, the
    /// positive path whose inverse is the negative part, and steps used.
    pub fn reverse_to_fraction(&self, w: &GroupoidWord, budget: usize) -> Option<(Vec<ArrowId>, Vec<ArrowId>, usize)> {
        let g = self.graph;
        let mut letters = w.letters().to_vec();
        let mut steps = 0;
        while let Some(k) = (0..letters.len().saturating_sub(1)).find(|&k| !letters[k].forward && letters[k + 1].forward) {
            let (x, y) = (letters[k].arrow, letters[k + 1].arrow);
            let mut replacement = Vec::new();
            if x != y {
                steps += 1;
                if steps > budget {
                    return None;
                }
                let (ax, ay) = (g.arrow(x), g.arrow(y));
                let (d, _) = g.opposite_across_face(ax.source, ax.label - 1, ay.label - 1);
                replacement.extend(g.minimal_gallery(ax.target, d).arrows().iter().map(|&a| Letter::fwd(a)));
                replacement.extend(g.minimal_gallery(ay.target, d).arrows().iter().rev().map(|&a| Letter::back(a)));
            }
            letters.splice(k..k + 2, replacement);
        }
        let split = letters.iter().position(|l| !l.forward).unwrap_or(letters.len());
        let pos = letters[..split].iter().map(|l| l.arrow).collect();
        let neg = letters[split..].iter().rev().map(|l| l.arrow).collect();
        Some((pos, neg, steps))
    }

    /// Paths from `C+` along the BFS spanning tree, visiting arrows in
    /// (chamber id, label) order.
    pub fn spanning_tree(&self) -> Vec<Option<ArrowId>> {
        let g = self.graph;
        let mut parent = vec![None; g.num_chambers()];
        let mut seen = vec![false; g.num_chambers()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for a in g.out_arrows(c) {
                if !seen[a.target] {
                    seen[a.target] = true;
                    parent[a.target] = Some(a.id);
                    queue.push_back(a.target);
                }
            }
        }
        parent
    }

    fn tree_path(&self, parent: &[Option<ArrowId>], c: ChamberId) -> GroupoidWord {
        let mut arrows = Vec::new();
        let mut at = c;
        while let Some(a) = parent[at] {
            arrows.push(a);
            at = self.graph.arrow(a).source;
        }
        arrows.reverse();
        GroupoidWord::from_path(self.graph, &PositivePath::from_parts(0, arrows))
    }

    /// Presentation of the vertex group at `C+`: one generator per directed
    /// arrow outside the spanning tree, one relation per face relation.
    pub fn vertex_presentation(&self) -> Presentation {
        let g = self.graph;
        let parent = self.spanning_tree();
        let tree: HashSet<ArrowId> = parent.iter().flatten().copied().collect();
        let paths: Vec<GroupoidWord> = (0..g.num_chambers()).map(|c| self.tree_path(&parent, c)).collect();
        let mut index: HashMap<ArrowId, i64> = HashMap::new();
        let mut generators = Vec::new();
        for a in g.arrows() {
            if tree.contains(&a.id) {
                continue;
            }
            let step = GroupoidWord::from_path(g, &PositivePath::from_parts(a.source, vec![a.id]));
            let word = paths[a.source]
                .then(&step)
                .and_then(|w| w.then(&paths[a.target].inverse()))
                .expect("tree paths compose")
                .free_reduce();
            generators.push(Generator { name: format!("x{}", a.id), arrow: a.id, word });
            index.insert(a.id, generators.len() as i64);
        }
        let relations = self
            .faces
            .iter()
            .map(|f| {
                let mut r: Vec<i64> = f.left.iter().filter_map(|a| index.get(a).copied()).collect();
                r.extend(f.right.iter().rev().filter_map(|a| index.get(a).map(|&s| -s)));
                r
            })
            .collect();
        Presentation { generators, relations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_coxeter_arrangement, cd4_arrangement, rank2_arrangement, CoxeterType, SignVector};

    fn cd4() -> SkeletonGraph {
        SkeletonGraph::build(&cd4_arrangement()).unwrap()
    }

    fn anticlockwise(g: &SkeletonGraph, first_label: usize, steps: usize) -> PositivePath {
        let mut at = 0;
        let mut arrows = vec![];
        for k in 0..steps {
            let label = if k % 2 == 0 { first_label } else { 3 - first_label };
            let a = g.arrow_with_label(at, label).unwrap();
            arrows.push(a);
            at = g.arrow(a).target;
        }
        PositivePath::new(g, 0, arrows).unwrap()
    }

    #[test]
    fn word_basics() {
        let g = cd4();
        let a = g.arrow_with_label(0, 1).unwrap();
        let w = GroupoidWord::new(&g, 0, vec![Letter::fwd(a), Letter::back(a)]).unwrap();
        assert!(w.is_loop());
        assert!(w.free_reduce().is_empty());
        assert!(GroupoidWord::new(&g, 0, vec![Letter::back(a)]).is_err());
        let r = g.reverse(a);
        let lp = GroupoidWord::new(&g, 0, vec![Letter::fwd(a), Letter::fwd(r)]).unwrap();
        assert_eq!(lp.free_reduce(), lp);
        assert_eq!(lp.inverse().inverse(), lp);
        assert_eq!(lp.to_string(), format!("{a} {r}"));
    }

    #[test]
    fn minimal_galleries_to_antipode_agree() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        let anti = g.fan().find(&SignVector::parse("----").unwrap()).unwrap();
        let gals = g.minimal_galleries(0, anti);
        assert_eq!(gals.len(), 2);
        assert!(gr.positive_path_equal(&gals[0], &gals[1]).unwrap());
        assert!(gr.positive_path_equal(&gals[0], &PositivePath::empty(0)).is_err());
    }

    #[test]
    fn non_minimal_paths_of_equal_length() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        // there and back across s1 versus across s2: both loops of length 2
        let a = g.arrow_with_label(0, 1).unwrap();
        let b = g.arrow_with_label(0, 2).unwrap();
        let p = PositivePath::new(&g, 0, vec![a, g.reverse(a)]).unwrap();
        let q = PositivePath::new(&g, 0, vec![b, g.reverse(b)]).unwrap();
        assert!(!gr.positive_path_equal(&p, &q).unwrap());
        // two length-2 paths to the same chamber exist only around the cycle
        let two = anticlockwise(&g, 1, 2);
        assert!(gr.positive_path_equal(&two, &two).unwrap());
    }

    #[test]
    fn eight_step_loops() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        let u = anticlockwise(&g, 1, 8);
        let v = anticlockwise(&g, 2, 8);
        assert_eq!(u.target(&g), 0);
        assert_eq!(v.target(&g), 0);
        assert!(gr.positive_path_equal(&u, &v).unwrap());
        let (wu, wv) = (GroupoidWord::from_path(&g, &u), GroupoidWord::from_path(&g, &v));
        assert_eq!(gr.groupoid_word_equal(&wu, &wv, 1000).unwrap(), WordVerdict::Equal);
    }

    #[test]
    fn meridian_is_not_trivial() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        let a = g.arrow_with_label(0, 1).unwrap();
        let u = GroupoidWord::new(&g, 0, vec![Letter::fwd(a), Letter::fwd(g.reverse(a))]).unwrap();
        let verdict = gr.groupoid_word_equal(&u, &GroupoidWord::empty(0), 100).unwrap();
        assert_ne!(verdict, WordVerdict::Equal);
        assert_eq!(gr.ktheory().f_along_word(&u).entries, crate::linalg::Matrix::identity(2));
    }

    #[test]
    fn syntactic_and_reduced_equality() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        let a = g.arrow_with_label(0, 2).unwrap();
        let u = GroupoidWord::new(&g, 0, vec![Letter::fwd(a), Letter::back(a)]).unwrap();
        assert_eq!(gr.groupoid_word_equal(&u, &GroupoidWord::empty(0), 0).unwrap(), WordVerdict::Equal);
        let other = GroupoidWord::empty(1);
        assert!(gr.groupoid_word_equal(&u, &other, 10).is_err());
    }

    #[test]
    fn reversing_a_commutation() {
        // x^-1 y with x, y the two arrows out of C+ in A1 x A1
        let arr = rank2_arrangement(2).unwrap();
        let g = SkeletonGraph::build(&arr).unwrap();
        let gr = Groupoid::new(&g).unwrap();
        let (x, y) = (g.arrow_with_label(0, 1).unwrap(), g.arrow_with_label(0, 2).unwrap());
        let w = GroupoidWord::from_letters(&g, vec![Letter::back(x), Letter::fwd(y)]).unwrap();
        let (pos, neg, steps) = gr.reverse_to_fraction(&w, 10).unwrap();
        assert_eq!((pos.len(), neg.len(), steps), (1, 1, 1));
        assert!(gr.reverse_to_fraction(&w, 0).is_none());
    }

    #[test]
    fn presentations() {
        let g = cd4();
        let gr = Groupoid::new(&g).unwrap();
        let p = gr.vertex_presentation();
        assert_eq!(p.generators.len(), 16 - 7);
        assert_eq!(p.relations.len(), 8);
        assert_eq!(p.abelianization(), Abelianization { free_rank: 4, torsion: vec![] });
        for r in &p.relations {
            let w = p.evaluate(r);
            assert_eq!(gr.groupoid_word_equal(&w, &GroupoidWord::empty(0), 10_000).unwrap(), WordVerdict::Equal);
        }

        let a1 = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 1).unwrap()).unwrap();
        let p = Groupoid::new(&a1).unwrap().vertex_presentation();
        assert_eq!(p.generators.len(), 1);
        assert!(p.relations.is_empty());
        assert_eq!(p.abelianization().free_rank, 1);

        let a3 = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 3).unwrap()).unwrap();
        let p = Groupoid::new(&a3).unwrap().vertex_presentation();
        assert_eq!(p.abelianization(), Abelianization { free_rank: 6, torsion: vec![] });
    }
}
