//! The complexified complement, its decomposition into pieces
//! `phi_L(H^n)`, and the combinatorial model of the stability manifold
//! covering it.

mod complex;
mod monodromy;
mod sample;
mod weyl;

pub use complex::{gaussian, gaussian_int, in_h, ClearedPoint, ComplexPoint, GaussianRational};
pub use monodromy::{Monodromy, DEFAULT_REFINEMENT_DEPTH};
pub use sample::{sample_charge, sample_complement_point, sample_gaussian, SampleWindow};
pub use weyl::{weyl_group, WeylGroup};

use crate::error::{Error, Result};
use crate::graph::{ChamberId, SkeletonGraph};
use crate::groupoid::GroupoidWord;
use crate::ktheory::{phi_of_chamber, KTheory};
use crate::linalg::Matrix;

/// A point `(Z, A_alpha)` of the model: `base` is a groupoid morphism
/// `C_L -> C+` and `charge` lists `Z` on the simples of `C_L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityPoint {
    base: GroupoidWord,
    charge: ComplexPoint,
}

impl StabilityPoint {
    pub fn new(graph: &SkeletonGraph, base: GroupoidWord, charge: ComplexPoint) -> Result<Self> {
        if base.target() != 0 {
            return Err(Error::validation(format!("base ends at chamber {}, not at C+", base.target())));
        }
        if base.source() >= graph.num_chambers() {
            return Err(Error::validation(format!("base starts at unknown chamber {}", base.source())));
        }
        if charge.len() != graph.rank() {
            return Err(Error::validation(format!("charge has {} coordinates, expected {}", charge.len(), graph.rank())));
        }
        if let Some(k) = charge.coords().iter().position(|c| !in_h(c)) {
            return Err(Error::validation(format!("charge[{k}] is not in the upper half-plane")));
        }
        Ok(StabilityPoint { base, charge })
    }

    pub fn base(&self) -> &GroupoidWord {
        &self.base
    }

    pub fn charge(&self) -> &ComplexPoint {
        &self.charge
    }

    pub fn chamber(&self) -> ChamberId {
        self.base.source()
    }
}

/// Piece membership and the covering map over one skeleton.
#[derive(Debug, Clone)]
pub struct Cover<'g> {
    kt: KTheory<'g>,
    frames: Vec<Matrix>,
    inverses: Vec<Matrix>,
}

impl<'g> Cover<'g> {
    pub fn new(graph: &'g SkeletonGraph) -> Result<Self> {
        let kt = KTheory::new(graph)?;
        let frames = graph
            .chambers()
            .iter()
            .map(|c| phi_of_chamber(c).map(|p| p.entries))
            .collect::<Result<Vec<_>>>()?;
        let inverses = frames.iter().map(|f| f.unimodular_inverse().expect("frames are unimodular")).collect();
        Ok(Cover { kt, frames, inverses })
    }

    pub fn graph(&self) -> &'g SkeletonGraph {
        self.kt.graph()
    }

    pub fn ktheory(&self) -> &KTheory<'g> {
        &self.kt
    }

    pub fn frame(&self, c: ChamberId) -> &Matrix {
        &self.frames[c]
    }

    fn check_len(&self, z: &ComplexPoint) -> Result<()> {
        let n = self.graph().rank();
        if z.len() != n {
            return Err(Error::validation(format!("point has {} coordinates, expected {n}", z.len())));
        }
        Ok(())
    }

    /// `phi_L^{-1} z` has every coordinate in the upper half-plane.
    pub fn in_piece(&self, z: &ComplexPoint, c: ChamberId) -> bool {
        z.cleared().transform_in_h(&self.inverses[c])
    }

    /// The first complexified hyperplane containing `z`, if any.
    pub fn on_hyperplane(&self, z: &ComplexPoint) -> Option<usize> {
        let cz = z.cleared();
        self.graph().arrangement().hyperplanes().iter().position(|h| {
            let (re, im) = cz.pair(h.normal());
            re == 0.into() && im == 0.into()
        })
    }

    /// Every piece containing `z` (exhaustive scan).
    pub fn pieces_containing(&self, z: &ComplexPoint) -> Vec<ChamberId> {
        let cz = z.cleared();
        (0..self.inverses.len()).filter(|&c| cz.transform_in_h(&self.inverses[c])).collect()
    }

    /// The unique piece containing `z`, checked against every chamber.
    pub fn locate(&self, z: &ComplexPoint) -> Result<ChamberId> {
        self.check_len(z)?;
        if let Some(h) = self.on_hyperplane(z) {
            return Err(Error::OnHyperplane { hyperplane: h });
        }
        match self.pieces_containing(z)[..] {
            [c] => Ok(c),
            [] => Err(Error::Coverage { point: z.to_string() }),
            ref many => Err(Error::Overlap { point: z.to_string(), chambers: many.to_vec() }),
        }
    }

    /// `p(Z, A_alpha) = phi_L(charge)` with `L` the source of `alpha`.
    pub fn project_p(&self, s: &StabilityPoint) -> ComplexPoint {
        s.charge.transform(&self.frames[s.chamber()])
    }

    /// The central charge on the simples of `C+`, computed as
    /// `F_alpha^{-T} charge` from the K-matrix of the base.
    pub fn central_charge(&self, s: &StabilityPoint) -> ComplexPoint {
        let f = self.kt.f_along_word(&s.base).entries;
        let inv_t = f.unimodular_inverse().expect("K-matrices are unimodular").transpose();
        s.charge.transform(&inv_t)
    }

    /// `(Z, A_alpha) -> (Z, A_{beta alpha})` for a loop `beta` at `C+`.
    pub fn deck_act(&self, beta: &GroupoidWord, s: &StabilityPoint) -> Result<StabilityPoint> {
        if beta.source() != 0 || beta.target() != 0 {
            return Err(Error::validation(format!(
                "deck transformations need a loop at C+, got {}->{}",
                beta.source(),
                beta.target()
            )));
        }
        Ok(StabilityPoint { base: s.base.then(beta)?, charge: s.charge.clone() })
    }

    /// If `s1` and `s2` have the same image, the loop `gamma` at `C+` (first
    /// `base1` backwards, then `base2`) with `s2 = deck_act(gamma, s1)`.
    pub fn same_fiber(&self, s1: &StabilityPoint, s2: &StabilityPoint) -> Result<Option<GroupoidWord>> {
        if self.project_p(s1) != self.project_p(s2) {
            return Ok(None);
        }
        if s1.chamber() != s2.chamber() {
            let z = self.project_p(s1);
            return Err(Error::Overlap { point: z.to_string(), chambers: vec![s1.chamber(), s2.chamber()] });
        }
        Ok(Some(s1.base.inverse().then(&s2.base)?.free_reduce()))
    }
}
