use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::complex::{ComplexPoint, GaussianRational};
use super::Cover;
use crate::error::{Error, Result};
use crate::graph::ChamberId;
use crate::groupoid::{GroupoidWord, Letter};
use crate::ktheory::KMatrix;

pub const DEFAULT_REFINEMENT_DEPTH: usize = 32;

/// Lift of a loop in the complement: the arrows recorded at piece changes
/// and their K-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monodromy {
    pub word: GroupoidWord,
    pub kmatrix: KMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bound {
    at: BigRational,
    closed: bool,
}

/// A nonempty parameter interval inside `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Interval {
    lo: Bound,
    hi: Bound,
}

impl Interval {
    fn unit() -> Self {
        Interval {
            lo: Bound { at: BigRational::zero(), closed: true },
            hi: Bound { at: BigRational::one(), closed: true },
        }
    }

    fn raise_lo(mut self, b: Bound) -> Option<Self> {
        if b.at > self.lo.at || (b.at == self.lo.at && !b.closed) {
            self.lo = b;
        }
        self.nonempty()
    }

    fn lower_hi(mut self, b: Bound) -> Option<Self> {
        if b.at < self.hi.at || (b.at == self.hi.at && !b.closed) {
            self.hi = b;
        }
        self.nonempty()
    }

    fn nonempty(self) -> Option<Self> {
        let ok = self.lo.at < self.hi.at || (self.lo.at == self.hi.at && self.lo.closed && self.hi.closed);
        ok.then_some(self)
    }
}

/// Parameters `u` in `[0, 1]` with `p + u q` in the semi-closed upper
/// half-plane. The half-plane is convex, so this is an interval.
fn half_plane_interval(p: &GaussianRational, q: &GaussianRational, within: Interval) -> Option<Interval> {
    if q.im.is_zero() {
        if p.im.is_positive() {
            return Some(within);
        }
        if p.im.is_negative() {
            return None;
        }
        // on the real axis throughout: need re < 0
        if q.re.is_zero() {
            return p.re.is_negative().then_some(within);
        }
        let root = -&p.re / &q.re;
        let b = Bound { at: root, closed: false };
        return if q.re.is_positive() { within.lower_hi(b) } else { within.raise_lo(b) };
    }
    let t0 = -&p.im / &q.im;
    let re_at = &p.re + &q.re * &t0;
    let b = Bound { at: t0, closed: re_at.is_negative() };
    if q.im.is_positive() {
        within.raise_lo(b)
    } else {
        within.lower_hi(b)
    }
}

impl Cover<'_> {
    /// Parameters of the segment `a + u (b - a)` lying in piece `c`.
    fn piece_interval(&self, c: ChamberId, a: &ComplexPoint, b: &ComplexPoint) -> Option<Interval> {
        let inv = &self.inverses[c];
        let wa = a.transform(inv);
        let wb = b.transform(inv);
        let mut iv = Interval::unit();
        for (p, pb) in wa.coords().iter().zip(wb.coords()) {
            let q = pb - p;
            iv = half_plane_interval(p, &q, iv)?;
        }
        Some(iv)
    }

    /// First hyperplane met by the closed segment `[a, b]`.
    fn segment_hits_hyperplane(&self, a: &ComplexPoint, b: &ComplexPoint) -> Option<usize> {
        self.graph().arrangement().hyperplanes().iter().position(|h| {
            let s = a.pair(h.normal());
            let d = b.pair(h.normal()) - &s;
            if d.is_zero() {
                return s.is_zero();
            }
            // s + u d = 0 with u real: u = -s conj(d) / |d|^2
            let num = -(s * d.conj());
            if !num.im.is_zero() {
                return false;
            }
            let u = num.re / d.norm_sqr();
            !u.is_negative() && u <= BigRational::one()
        })
    }

    /// First hyperplane met by a vertex or an edge of the polyline.
    pub fn polyline_hits_hyperplane(&self, polyline: &[ComplexPoint]) -> Option<usize> {
        if let [z] = polyline {
            return self.on_hyperplane(z);
        }
        polyline.windows(2).find_map(|w| self.segment_hits_hyperplane(&w[0], &w[1]))
    }

    /// A polyline is generic when it avoids every complexified hyperplane,
    /// no hyperplane value `h . z` stays real along a whole edge, and no two
    /// hyperplane values become real at the same point of an edge. Piece
    /// walls are hyperplanes, so generic polylines only pass between
    /// wall-adjacent pieces.
    pub fn polyline_is_generic(&self, polyline: &[ComplexPoint]) -> bool {
        if self.polyline_hits_hyperplane(polyline).is_some() {
            return false;
        }
        let normals = self.graph().arrangement().normals();
        polyline.windows(2).all(|w| {
            let mut times = Vec::new();
            for h in &normals {
                let s = w[0].pair(h);
                let d = w[1].pair(h) - &s;
                if d.im.is_zero() {
                    if s.im.is_zero() {
                        return false;
                    }
                    continue;
                }
                let t = -&s.im / &d.im;
                if !t.is_negative() && t <= BigRational::one() {
                    if times.contains(&t) {
                        return false;
                    }
                    times.push(t);
                }
            }
            true
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn lift_segment(
        &self,
        a: &ComplexPoint,
        b: &ComplexPoint,
        la: ChamberId,
        lb: ChamberId,
        depth: usize,
        segment: usize,
        out: &mut Vec<Letter>,
    ) -> Result<()> {
        if la == lb {
            // pieces are convex
            return Ok(());
        }
        if let (Some(ia), Some(ib)) = (self.piece_interval(la, a, b), self.piece_interval(lb, a, b)) {
            let joined = ia.hi.at == ib.lo.at && ia.hi.closed != ib.lo.closed;
            if joined {
                let g = self.graph();
                return match (g.arrow_between(la, lb), g.arrow_between(lb, la)) {
                    (Some(fwd), Some(back)) => {
                        // closed end: the wall coordinate left H through the
                        // negative reals, so traverse lb -> la backwards
                        out.push(if ia.hi.closed { Letter::back(back) } else { Letter::fwd(fwd) });
                        Ok(())
                    }
                    _ => Err(Error::RefinementNeeded { segment, from: la, to: lb }),
                };
            }
        }
        if depth == 0 {
            return Err(Error::RefinementNeeded { segment, from: la, to: lb });
        }
        let mid = a.lerp(b, &BigRational::new(1.into(), 2.into()));
        let lm = self.locate(&mid)?;
        self.lift_segment(a, &mid, la, lm, depth - 1, segment, out)?;
        self.lift_segment(&mid, b, lm, lb, depth - 1, segment, out)
    }

    /// Lifts a closed polyline starting in the piece of `base`.
    pub fn monodromy(&self, polyline: &[ComplexPoint], base: ChamberId, depth: usize) -> Result<Monodromy> {
        let g = self.graph();
        if base >= g.num_chambers() {
            return Err(Error::validation(format!("chamber {base} does not exist")));
        }
        let (Some(first), Some(last)) = (polyline.first(), polyline.last()) else {
            return Err(Error::validation("polyline is empty"));
        };
        if first != last {
            return Err(Error::validation("polyline is not closed: first and last vertices differ"));
        }
        let pieces = polyline.iter().map(|z| self.locate(z)).collect::<Result<Vec<_>>>()?;
        if pieces[0] != base {
            return Err(Error::validation(format!(
                "polyline starts in the piece of chamber {}, not {base}",
                pieces[0]
            )));
        }
        let mut letters = Vec::new();
        for (k, w) in polyline.windows(2).enumerate() {
            if let Some(h) = self.segment_hits_hyperplane(&w[0], &w[1]) {
                return Err(Error::OnHyperplane { hyperplane: h });
            }
            self.lift_segment(&w[0], &w[1], pieces[k], pieces[k + 1], depth, k, &mut letters)?;
        }
        let word = GroupoidWord::new(g, base, letters)?;
        let kmatrix = self.kt.f_along_word(&word);
        Ok(Monodromy { word, kmatrix })
    }
}
