use std::collections::{HashSet, VecDeque};

use super::complex::ComplexPoint;
use crate::arrangement::{cartan_matrix, ArrangementKind, CoxeterType, SignVector};
use crate::error::{Error, Result};
use crate::graph::{ChamberId, SkeletonGraph};
use crate::linalg::{dot, Matrix};

/// A finite Weyl group acting on coweight coordinates, fully enumerated.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    ty: CoxeterType,
    rank: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

/// Closure of the simple reflections `theta -> theta - theta_i C[:, i]`.
pub fn weyl_group(ty: CoxeterType, rank: usize) -> Result<WeylGroup> {
    let c = cartan_matrix(ty, rank)?;
    let generators: Vec<Matrix> = (0..rank)
        .map(|i| {
            let mut s = Matrix::identity(rank);
            for r in 0..rank {
                s.set(r, i, s.get(r, i) - c.get(r, i));
            }
            s
        })
        .collect();
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut elements = vec![Matrix::identity(rank)];
    seen.insert(Matrix::identity(rank));
    let mut queue = VecDeque::from([Matrix::identity(rank)]);
    while let Some(w) = queue.pop_front() {
        for s in &generators {
            let next = s.mul(&w);
            if seen.insert(next.clone()) {
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(WeylGroup { ty, rank, generators, elements })
}

impl WeylGroup {
    pub fn for_arrangement(kind: &ArrangementKind) -> Result<Self> {
        match kind {
            ArrangementKind::Coxeter { ty, rank } => weyl_group(*ty, *rank),
            other => Err(Error::validation(format!("{other} arrangement has no Weyl group"))),
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    /// Distinct images of `z`, in element order.
    pub fn orbit(&self, z: &ComplexPoint) -> Vec<ComplexPoint> {
        let mut seen = HashSet::new();
        self.elements
            .iter()
            .map(|w| z.transform(w))
            .filter(|p| seen.insert(p.clone()))
            .collect()
    }

    /// Size of the fibre of the quotient map through `z`.
    pub fn quotient_fiber_size(&self, z: &ComplexPoint) -> usize {
        self.orbit(z).len()
    }

    /// The chamber `w C+` for every element `w`, located by the sign vector
    /// of `w (1, ..., 1)`.
    pub fn chamber_orbit(&self, graph: &SkeletonGraph) -> Result<Vec<ChamberId>> {
        let normals = graph.arrangement().normals();
        let ones = vec![1; self.rank];
        self.elements
            .iter()
            .map(|w| {
                let p = w.mul_vec(&ones);
                let signs: Vec<bool> = normals.iter().map(|h| dot(h, &p) > 0).collect();
                if normals.iter().any(|h| dot(h, &p) == 0) {
                    return Err(Error::structure("a Weyl image of an interior point lies on a hyperplane"));
                }
                graph
                    .fan()
                    .find(&SignVector::new(signs))
                    .ok_or_else(|| Error::structure("a Weyl image of C+ is not a chamber"))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::build_coxeter_arrangement;
    use crate::cover::gaussian;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn orders_match_formulas() {
        assert_eq!(weyl_group(CoxeterType::A, 1).unwrap().order(), 2);
        assert_eq!(weyl_group(CoxeterType::A, 2).unwrap().order(), factorial(3));
        assert_eq!(weyl_group(CoxeterType::A, 3).unwrap().order(), factorial(4));
        assert_eq!(weyl_group(CoxeterType::D, 4).unwrap().order(), (1 << 3) * factorial(4));
    }

    #[test]
    fn generators_are_involutions() {
        let w = weyl_group(CoxeterType::D, 4).unwrap();
        for s in w.generators() {
            assert!(s.mul(s).is_identity());
        }
    }

    #[test]
    fn generic_orbit_is_regular() {
        let w = weyl_group(CoxeterType::A, 3).unwrap();
        let z = ComplexPoint::new(vec![
            gaussian(1, 3, 2, 7).unwrap(),
            gaussian(5, 2, -1, 9).unwrap(),
            gaussian(-3, 11, 1, 1).unwrap(),
        ]);
        assert_eq!(w.quotient_fiber_size(&z), 24);
        assert_eq!(w.elements()[0].mul_vec(&[3, 4, 5]), vec![3, 4, 5]);
    }

    #[test]
    fn chambers_are_one_orbit() {
        for (ty, n) in [(CoxeterType::A, 2), (CoxeterType::A, 3)] {
            let g = SkeletonGraph::build(&build_coxeter_arrangement(ty, n).unwrap()).unwrap();
            let w = weyl_group(ty, n).unwrap();
            let mut ids = w.chamber_orbit(&g).unwrap();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), g.num_chambers());
        }
        assert!(WeylGroup::for_arrangement(&ArrangementKind::Rank2).is_err());
    }
}
