//! The labelled skeleton graph of a simplicial arrangement and its galleries.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::arrangement::{Arrangement, Chamber, Fan, WalkOrder};
use crate::error::{Error, Result};

pub type ChamberId = usize;
pub type ArrowId = usize;

/// A directed edge of the skeleton, crossing one wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: ChamberId,
    pub target: ChamberId,
    /// Wall label `i` in `1..=rank`: crossing replaces ray `i`.
    pub label: usize,
    pub hyperplane: usize,
}

/// The skeleton graph. Arrow `c * rank + (i - 1)` leaves chamber `c` through
/// its wall labelled `s_i`.
#[derive(Debug, Clone)]
pub struct SkeletonGraph {
    fan: Fan,
    arrows: Vec<Arrow>,
    reverse: Vec<ArrowId>,
}

/// A composable sequence of arrows, stored in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PositivePath {
    source: ChamberId,
    arrows: Vec<ArrowId>,
}

impl PositivePath {
    pub fn empty(at: ChamberId) -> Self {
        PositivePath { source: at, arrows: vec![] }
    }

    pub fn new(graph: &SkeletonGraph, source: ChamberId, arrows: Vec<ArrowId>) -> Result<Self> {
        if source >= graph.num_chambers() {
            return Err(Error::validation(format!("chamber {source} does not exist")));
        }
        let mut at = source;
        for (k, &a) in arrows.iter().enumerate() {
            let arrow = graph
                .try_arrow(a)
                .ok_or_else(|| Error::validation(format!("arrow {a} does not exist")))?;
            if arrow.source != at {
                return Err(Error::validation(format!(
                    "arrow {a} at position {k} starts at chamber {} but the path is at {at}",
                    arrow.source
                )));
            }
            at = arrow.target;
        }
        Ok(PositivePath { source, arrows })
    }

    pub fn source(&self) -> ChamberId {
        self.source
    }

    pub fn target(&self, graph: &SkeletonGraph) -> ChamberId {
        self.arrows.last().map_or(self.source, |&a| graph.arrow(a).target)
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `other` after `self`. Panics if not composable.
    pub fn then(&self, graph: &SkeletonGraph, other: &PositivePath) -> PositivePath {
        assert_eq!(self.target(graph), other.source, "paths are not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        PositivePath { source: self.source, arrows }
    }

    pub(crate) fn from_parts(source: ChamberId, arrows: Vec<ArrowId>) -> Self {
        PositivePath { source, arrows }
    }
}

impl SkeletonGraph {
    pub fn build(arr: &Arrangement) -> Result<Self> {
        Self::build_with(arr, WalkOrder::Canonical)
    }

    pub fn build_with(arr: &Arrangement, order: WalkOrder) -> Result<Self> {
        Ok(Self::from_fan(Fan::build_with(arr, order)?))
    }

    pub fn from_fan(fan: Fan) -> Self {
        let n = fan.rank();
        let mut arrows = Vec::with_capacity(fan.len() * n);
        for c in 0..fan.len() {
            for (i, w) in fan.walls(c).iter().enumerate() {
                arrows.push(Arrow {
                    id: c * n + i,
                    source: c,
                    target: w.neighbor,
                    label: i + 1,
                    hyperplane: w.hyperplane,
                });
            }
        }
        let reverse = arrows
            .iter()
            .map(|a| {
                fan.walls(a.target)
                    .iter()
                    .position(|w| w.neighbor == a.source)
                    .map(|i| a.target * n + i)
                    .expect("adjacency is symmetric")
            })
            .collect();
        SkeletonGraph { fan, arrows, reverse }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn arrangement(&self) -> &Arrangement {
        self.fan.arrangement()
    }

    pub fn rank(&self) -> usize {
        self.fan.rank()
    }

    pub fn num_chambers(&self) -> usize {
        self.fan.len()
    }

    pub fn chamber(&self, id: ChamberId) -> &Chamber {
        self.fan.chamber(id)
    }

    pub fn chambers(&self) -> &[Chamber] {
        self.fan.chambers()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn try_arrow(&self, id: ArrowId) -> Option<&Arrow> {
        self.arrows.get(id)
    }

    /// The opposite arrow.
    pub fn reverse(&self, id: ArrowId) -> ArrowId {
        self.reverse[id]
    }

    /// Outgoing arrows of `c`, in label order.
    pub fn out_arrows(&self, c: ChamberId) -> impl Iterator<Item = &Arrow> {
        let n = self.rank();
        self.arrows[c * n..(c + 1) * n].iter()
    }

    /// The arrow `from -> to`, if the chambers are adjacent.
    pub fn arrow_between(&self, from: ChamberId, to: ChamberId) -> Option<ArrowId> {
        self.out_arrows(from).find(|a| a.target == to).map(|a| a.id)
    }

    /// The arrow leaving `c` with label `label` (1-based).
    pub fn arrow_with_label(&self, c: ChamberId, label: usize) -> Option<ArrowId> {
        (1..=self.rank()).contains(&label).then(|| c * self.rank() + label - 1)
    }

    /// Hyperplanes separating two chambers.
    pub fn separation_set(&self, c: ChamberId, d: ChamberId) -> BTreeSet<usize> {
        self.chamber(c).signs.difference(&self.chamber(d).signs).into_iter().collect()
    }

    pub fn distance(&self, c: ChamberId, d: ChamberId) -> usize {
        self.chamber(c).signs.difference(&self.chamber(d).signs).len()
    }

    /// Every minimal gallery from `c` to `d`, in lexicographic order of
    /// arrow ids. Each step crosses a hyperplane that still separates the
    /// current chamber from `d`, so only minimal galleries are generated.
    pub fn minimal_galleries(&self, c: ChamberId, d: ChamberId) -> Vec<PositivePath> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.galleries_rec(c, d, &mut stack, &mut out);
        out.into_iter().map(|arrows| PositivePath { source: c, arrows }).collect()
    }

    fn galleries_rec(&self, at: ChamberId, d: ChamberId, stack: &mut Vec<ArrowId>, out: &mut Vec<Vec<ArrowId>>) {
        if at == d {
            out.push(stack.clone());
            return;
        }
        let target = &self.chamber(d).signs;
        let here = &self.chamber(at).signs;
        for a in self.out_arrows(at) {
            if here.get(a.hyperplane) != target.get(a.hyperplane) {
                stack.push(a.id);
                self.galleries_rec(a.target, d, stack, out);
                stack.pop();
            }
        }
    }

    /// One minimal gallery from `c` to `d`: always cross the separating wall
    /// with the smallest label.
    pub fn minimal_gallery(&self, c: ChamberId, d: ChamberId) -> PositivePath {
        let target = &self.chamber(d).signs;
        let mut at = c;
        let mut arrows = Vec::new();
        while at != d {
            let here = &self.chamber(at).signs;
            let a = self
                .out_arrows(at)
                .find(|a| here.get(a.hyperplane) != target.get(a.hyperplane))
                .expect("a separating wall of the current chamber exists");
            arrows.push(a.id);
            at = a.target;
        }
        PositivePath { source: c, arrows }
    }

    /// A path is minimal iff it crosses no hyperplane twice.
    pub fn is_minimal(&self, p: &PositivePath) -> bool {
        let mut seen = BTreeSet::new();
        p.arrows.iter().all(|&a| seen.insert(self.arrow(a).hyperplane))
    }

    /// The chamber opposite `c` across its codimension-2 face spanned by all
    /// rays except those at positions `i` and `j` (0-based), together with
    /// the hyperplanes through that face.
    pub fn opposite_across_face(&self, c: ChamberId, i: usize, j: usize) -> (ChamberId, Vec<usize>) {
        let ch = self.chamber(c);
        let normals = self.arrangement().normals();
        let through: Vec<usize> = normals
            .iter()
            .enumerate()
            .filter(|(_, h)| {
                ch.rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == i || k == j || crate::linalg::dot(h, r) == 0)
            })
            .map(|(k, _)| k)
            .collect();
        let mut signs = ch.signs.clone();
        for &h in &through {
            signs = signs.flipped(h);
        }
        let d = self.fan.find(&signs).expect("opposite chamber around a face exists");
        (d, through)
    }

    /// Graphviz rendering with arrows labelled `s<i>`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph skeleton {\n");
        for c in self.chambers() {
            let _ = writeln!(s, "  c{} [label=\"{}: {}\"];", c.id, c.id, c.signs);
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  c{} -> c{} [label=\"s{}\"];", a.source, a.target, a.label);
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_coxeter_arrangement, cd4_arrangement, CoxeterType, SignVector};

    fn cd4() -> SkeletonGraph {
        SkeletonGraph::build(&cd4_arrangement()).unwrap()
    }

    /// Walk the 8-cycle anticlockwise from C+ (first crossing s1).
    fn anticlockwise(g: &SkeletonGraph) -> Vec<&Arrow> {
        let mut out = Vec::new();
        let mut at = 0;
        let mut label = 1;
        for _ in 0..8 {
            let a = g.arrow(g.arrow_with_label(at, label).unwrap());
            out.push(a);
            at = a.target;
            label = 3 - label;
        }
        out
    }

    #[test]
    fn cd4_is_an_alternating_cycle() {
        let g = cd4();
        assert_eq!(g.num_chambers(), 8);
        assert_eq!(g.arrows().len(), 16);
        let cycle = anticlockwise(&g);
        let visited: BTreeSet<_> = cycle.iter().map(|a| a.source).collect();
        assert_eq!(visited.len(), 8);
        assert_eq!(cycle.last().unwrap().target, 0);
        // the anticlockwise walk crosses 90, 135, 153, 180, 270, 315, 333, 0 degrees
        let hyperplanes: Vec<usize> = cycle.iter().map(|a| a.hyperplane).collect();
        assert_eq!(hyperplanes, vec![0, 2, 3, 1, 0, 2, 3, 1]);
    }

    #[test]
    fn a1_two_chambers() {
        let g = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 1).unwrap()).unwrap();
        assert_eq!(g.num_chambers(), 2);
        assert_eq!(g.arrows().len(), 2);
        assert_eq!(g.arrow(0).label, 1);
        assert_eq!(g.arrow(1).label, 1);
        assert_eq!(g.reverse(0), 1);
    }

    #[test]
    fn a2_hexagon_alternates() {
        let g = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 2).unwrap()).unwrap();
        assert_eq!(g.num_chambers(), 6);
        let mut at = 0;
        let mut label = 1;
        let mut seen = BTreeSet::new();
        for _ in 0..6 {
            seen.insert(at);
            at = g.arrow(g.arrow_with_label(at, label).unwrap()).target;
            label = 3 - label;
        }
        assert_eq!(at, 0);
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn arrows_pair_up_with_equal_labels() {
        for arr in [cd4_arrangement(), build_coxeter_arrangement(CoxeterType::A, 3).unwrap()] {
            let g = SkeletonGraph::build(&arr).unwrap();
            for a in g.arrows() {
                let r = g.arrow(g.reverse(a.id));
                assert_eq!((r.source, r.target), (a.target, a.source));
                assert_eq!(r.label, a.label);
                assert_eq!(r.hyperplane, a.hyperplane);
                assert_eq!(g.separation_set(a.source, a.target), BTreeSet::from([a.hyperplane]));
            }
            for c in 0..g.num_chambers() {
                let labels: BTreeSet<usize> = g.out_arrows(c).map(|a| a.label).collect();
                assert_eq!(labels, (1..=g.rank()).collect());
            }
        }
    }

    #[test]
    fn separation_examples() {
        let g = cd4();
        assert!(g.separation_set(3, 3).is_empty());
        let anti = g.fan().find(&SignVector::parse("----").unwrap()).unwrap();
        assert_eq!(g.separation_set(0, anti), BTreeSet::from([0, 1, 2, 3]));
        let s1 = g.arrow(g.arrow_with_label(0, 1).unwrap()).target;
        // the s1 neighbour is across x = 0
        assert_eq!(g.separation_set(0, s1), BTreeSet::from([0]));
    }

    #[test]
    fn gallery_examples() {
        let g = cd4();
        let anti = g.fan().find(&SignVector::parse("----").unwrap()).unwrap();
        let gals = g.minimal_galleries(0, anti);
        assert_eq!(gals.len(), 2);
        assert!(gals.iter().all(|p| p.len() == 4 && g.is_minimal(p)));
        assert_ne!(gals[0], gals[1]);
        let s1 = g.arrow(0).target;
        assert_eq!(g.minimal_galleries(0, s1), vec![PositivePath::from_parts(0, vec![0])]);
        assert_eq!(g.minimal_galleries(5, 5), vec![PositivePath::empty(5)]);
        assert_eq!(g.minimal_gallery(0, anti).len(), 4);
    }

    #[test]
    fn path_validation() {
        let g = cd4();
        assert!(PositivePath::new(&g, 0, vec![0, 1]).is_err() || g.arrow(1).source == g.arrow(0).target);
        assert!(PositivePath::new(&g, 0, vec![99]).is_err());
        assert!(PositivePath::new(&g, 42, vec![]).is_err());
        let a = g.arrow(0);
        let p = PositivePath::new(&g, 0, vec![0, g.reverse(0)]).unwrap();
        assert_eq!(p.target(&g), 0);
        assert_eq!(p.source(), a.source);
        assert!(!g.is_minimal(&p));
    }

    #[test]
    fn dot_output() {
        let dot = cd4().to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("label=\"s1\"").count(), 8);
        assert_eq!(dot.matches("label=\"s2\"").count(), 8);
    }
}
