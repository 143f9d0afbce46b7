//! Wall-crossing matrices on Grothendieck groups.
//!
//! Every matrix carries the chamber ids of its source and target, since each
//! chamber's simple basis is only meaningful relative to that chamber.
//! Composites follow the functional convention: for a path `a_1, ..., a_t`
//! the product is `F(a_t) ... F(a_1)`, earliest step rightmost.

use serde::{Deserialize, Serialize};

use crate::arrangement::Chamber;
use crate::error::{Error, Result};
use crate::graph::{ArrowId, ChamberId, PositivePath, SkeletonGraph};
use crate::groupoid::GroupoidWord;
use crate::linalg::Matrix;

/// Simple-tracking map `G0(source) -> G0(target)` in the ordered simple
/// bases of both chambers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KMatrix {
    pub source: ChamberId,
    pub target: ChamberId,
    pub entries: Matrix,
}

impl KMatrix {
    pub fn identity(at: ChamberId, n: usize) -> Self {
        KMatrix { source: at, target: at, entries: Matrix::identity(n) }
    }

    /// `other` after `self`.
    pub fn then(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.target, other.source, "K-matrices are not composable");
        KMatrix { source: self.source, target: other.target, entries: other.entries.mul(&self.entries) }
    }

    pub fn inverse(&self) -> KMatrix {
        KMatrix {
            source: self.target,
            target: self.source,
            entries: self.entries.unimodular_inverse().expect("K-matrices are unimodular"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_identity()
    }
}

/// Chamber frame: column `j` is ray `j` (the g-vector of summand `j`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMatrix {
    pub chamber: ChamberId,
    pub entries: Matrix,
}

/// Exchange numbers `b_ij` (`j != i`) of the wall labelled `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeRow {
    pub wall: usize,
    /// `(j, b_ij)` for every `j != i`, 1-based, ascending in `j`.
    pub coefficients: Vec<(usize, i64)>,
}

impl ExchangeRow {
    pub fn rank(&self) -> usize {
        self.coefficients.len() + 1
    }

    pub fn get(&self, j: usize) -> Option<i64> {
        self.coefficients.iter().find(|&&(k, _)| k == j).map(|&(_, b)| b)
    }
}

pub fn phi_of_chamber(c: &Chamber) -> Result<PhiMatrix> {
    let entries = c.frame();
    if entries.det().abs() != 1 {
        return Err(Error::structure(format!("frame of chamber {} is not unimodular: {:?}", c.id, c.rays)));
    }
    Ok(PhiMatrix { chamber: c.id, entries })
}

/// Solves `new_ray_i = -ray_i + sum_j b_ij ray_j` in the source frame.
pub fn crossing_data(graph: &SkeletonGraph, arrow: ArrowId) -> Result<ExchangeRow> {
    let a = graph.arrow(arrow);
    let i = a.label - 1;
    let source = graph.chamber(a.source);
    let frame = phi_of_chamber(source)?.entries;
    let inv = frame.unimodular_inverse().expect("checked unimodular");
    let new_ray = &graph.chamber(a.target).rays[i];
    let c = inv.mul_vec(new_ray);
    if frame.mul_vec(&c) != *new_ray {
        return Err(Error::structure(format!("arrow {arrow}: new ray {new_ray:?} is not an integral combination of the frame")));
    }
    if c[i] != -1 {
        return Err(Error::structure(format!(
            "arrow {arrow}: replaced ray has coefficient {} instead of -1",
            c[i]
        )));
    }
    let coefficients: Vec<(usize, i64)> = c
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(j, &b)| (j + 1, b))
        .collect();
    if let Some(&(j, b)) = coefficients.iter().find(|&&(_, b)| b < 0) {
        return Err(Error::structure(format!("arrow {arrow}: exchange number b_{}{} = {b} is negative", a.label, j)));
    }
    Ok(ExchangeRow { wall: a.label, coefficients })
}

/// `[S_i] -> -[S_i]`, `[S_t] -> b_it [S_i] + [S_t]` for `t != i`, as a matrix
/// acting on coefficient columns.
pub fn f_matrix(row: &ExchangeRow) -> Matrix {
    let n = row.rank();
    let i = row.wall - 1;
    let mut m = Matrix::identity(n);
    m.set(i, i, -1);
    for &(t, b) in &row.coefficients {
        m.set(i, t - 1, b);
    }
    m
}

/// The dual step `e_t -> e_t`, `e_i -> -e_i + sum_j b_ij e_j`, built directly
/// from the row (not by transposing [`f_matrix`]).
pub fn phi_step_matrix(row: &ExchangeRow) -> Matrix {
    let n = row.rank();
    let i = row.wall - 1;
    let mut m = Matrix::identity(n);
    m.set(i, i, -1);
    for &(j, b) in &row.coefficients {
        m.set(j - 1, i, b);
    }
    m
}

/// Per-arrow exchange data for a whole skeleton.
#[derive(Debug, Clone)]
pub struct KTheory<'g> {
    graph: &'g SkeletonGraph,
    rows: Vec<ExchangeRow>,
    f: Vec<Matrix>,
}

impl<'g> KTheory<'g> {
    pub fn new(graph: &'g SkeletonGraph) -> Result<Self> {
        let rows = (0..graph.arrows().len())
            .map(|a| crossing_data(graph, a))
            .collect::<Result<Vec<_>>>()?;
        let f = rows.iter().map(f_matrix).collect();
        Ok(KTheory { graph, rows, f })
    }

    pub fn graph(&self) -> &'g SkeletonGraph {
        self.graph
    }

    pub fn exchange_row(&self, a: ArrowId) -> &ExchangeRow {
        &self.rows[a]
    }

    pub fn arrow_matrix(&self, a: ArrowId) -> KMatrix {
        let arrow = self.graph.arrow(a);
        KMatrix { source: arrow.source, target: arrow.target, entries: self.f[a].clone() }
    }

    pub fn phi_step(&self, a: ArrowId) -> Matrix {
        phi_step_matrix(&self.rows[a])
    }

    pub fn f_along_path(&self, path: &PositivePath) -> KMatrix {
        let mut m = KMatrix::identity(path.source(), self.graph.rank());
        for &a in path.arrows() {
            m = m.then(&self.arrow_matrix(a));
        }
        m
    }

    /// Product along a groupoid word; a backwards letter contributes the
    /// inverse of its arrow's matrix.
    pub fn f_along_word(&self, word: &GroupoidWord) -> KMatrix {
        let mut m = KMatrix::identity(word.source(), self.graph.rank());
        for l in word.letters() {
            let step = self.arrow_matrix(l.arrow);
            m = m.then(&if l.forward { step } else { step.inverse() });
        }
        m
    }
}

/// One failed frame check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiFailure {
    pub chamber: ChamberId,
    pub gallery: Vec<ArrowId>,
    pub product: Matrix,
    pub frame: Matrix,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub galleries_checked: usize,
    pub failures: Vec<PhiFailure>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every chamber `L` and every minimal gallery `L -> C+` with arrows
/// `c_1, ..., c_t`, checks `phi_step(c_t) ... phi_step(c_1) = phi(L)`.
/// Galleries are walked depth-first with a running product.
pub fn phi_consistency_check(kt: &KTheory) -> Result<PhiReport> {
    let g = kt.graph();
    let mut report = PhiReport::default();
    let n = g.rank();
    for c in g.chambers() {
        let frame = phi_of_chamber(c)?.entries;
        let mut stack = Vec::new();
        dfs_phi(kt, c.id, c.id, Matrix::identity(n), &frame, &mut stack, &mut report);
    }
    Ok(report)
}

fn dfs_phi(
    kt: &KTheory,
    start: ChamberId,
    at: ChamberId,
    product: Matrix,
    frame: &Matrix,
    stack: &mut Vec<ArrowId>,
    report: &mut PhiReport,
) {
    let g = kt.graph();
    if at == 0 {
        report.galleries_checked += 1;
        if product != *frame {
            report.failures.push(PhiFailure { chamber: start, gallery: stack.clone(), product, frame: frame.clone() });
        }
        return;
    }
    let here = &g.chamber(at).signs;
    for a in g.out_arrows(at) {
        // C+ is all-positive: cross only walls we are on the negative side of
        if !here.get(a.hyperplane) {
            stack.push(a.id);
            let next = kt.phi_step(a.id).mul(&product);
            dfs_phi(kt, start, a.target, next, frame, stack, report);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_coxeter_arrangement, cd4_arrangement, rank2_arrangement, CoxeterType, SignVector};

    fn cd4() -> SkeletonGraph {
        SkeletonGraph::build(&cd4_arrangement()).unwrap()
    }

    #[test]
    fn cd4_exchange_numbers() {
        let g = cd4();
        let s1 = crossing_data(&g, g.arrow_with_label(0, 1).unwrap()).unwrap();
        assert_eq!(s1, ExchangeRow { wall: 1, coefficients: vec![(2, 1)] });
        let s2 = crossing_data(&g, g.arrow_with_label(0, 2).unwrap()).unwrap();
        assert_eq!(s2, ExchangeRow { wall: 2, coefficients: vec![(1, 2)] });
        assert_eq!(f_matrix(&s1), Matrix::from_rows(vec![vec![-1, 1], vec![0, 1]]));
    }

    #[test]
    fn rank_one() {
        let g = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 1).unwrap()).unwrap();
        let row = crossing_data(&g, 0).unwrap();
        assert!(row.coefficients.is_empty());
        assert_eq!(f_matrix(&row), Matrix::from_rows(vec![vec![-1]]));
        assert_eq!(g.chamber(1).rays, vec![vec![-1]]);
    }

    #[test]
    fn phi_examples() {
        let g = cd4();
        assert!(phi_of_chamber(g.chamber(0)).unwrap().entries.is_identity());
        let c1 = g.arrow(g.arrow_with_label(0, 1).unwrap()).target;
        assert_eq!(phi_of_chamber(g.chamber(c1)).unwrap().entries, Matrix::from_columns(&[vec![-1, 1], vec![0, 1]]));
        let anti = g.fan().find(&SignVector::parse("----").unwrap()).unwrap();
        let kt = KTheory::new(&g).unwrap();
        let gallery = g.minimal_gallery(0, anti);
        let mut prod = Matrix::identity(2);
        for &a in gallery.arrows() {
            prod = prod.mul(&kt.phi_step(a));
        }
        assert_eq!(prod, Matrix::from_rows(vec![vec![-1, 0], vec![0, -1]]));
        assert_eq!(phi_of_chamber(g.chamber(anti)).unwrap().entries, prod);
    }

    #[test]
    fn involution_transpose_and_reverse_laws() {
        for arr in [
            cd4_arrangement(),
            rank2_arrangement(6).unwrap(),
            build_coxeter_arrangement(CoxeterType::A, 3).unwrap(),
        ] {
            let g = SkeletonGraph::build(&arr).unwrap();
            let kt = KTheory::new(&g).unwrap();
            for a in g.arrows() {
                let f = kt.arrow_matrix(a.id);
                assert!(f.then(&kt.arrow_matrix(g.reverse(a.id))).is_identity());
                assert_eq!(f.entries, kt.arrow_matrix(g.reverse(a.id)).entries);
                assert_eq!(kt.phi_step(a.id), f.entries.transpose());
                let src = phi_of_chamber(g.chamber(a.source)).unwrap().entries;
                let tgt = phi_of_chamber(g.chamber(a.target)).unwrap().entries;
                assert_eq!(tgt, src.mul(&kt.phi_step(a.id)));
            }
        }
    }

    #[test]
    fn paths_and_loops() {
        let g = cd4();
        let kt = KTheory::new(&g).unwrap();
        assert!(kt.f_along_path(&PositivePath::empty(0)).is_identity());
        // the anticlockwise 8-step loop
        let mut at = 0;
        let mut arrows = vec![];
        for k in 0..8 {
            let a = g.arrow_with_label(at, 1 + k % 2).unwrap();
            arrows.push(a);
            at = g.arrow(a).target;
        }
        let lp = PositivePath::new(&g, 0, arrows).unwrap();
        assert!(kt.f_along_path(&lp).is_identity());
        let anti = g.fan().find(&SignVector::parse("----").unwrap()).unwrap();
        let gals = g.minimal_galleries(0, anti);
        assert_eq!(kt.f_along_path(&gals[0]), kt.f_along_path(&gals[1]));
    }

    #[test]
    fn consistency_reports() {
        for (arr, chambers) in [(cd4_arrangement(), 8), (build_coxeter_arrangement(CoxeterType::A, 3).unwrap(), 24)] {
            let g = SkeletonGraph::build(&arr).unwrap();
            assert_eq!(g.num_chambers(), chambers);
            let r = phi_consistency_check(&KTheory::new(&g).unwrap()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.galleries_checked >= chambers);
        }
    }
}
