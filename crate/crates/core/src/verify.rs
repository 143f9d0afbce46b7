//! Seeded property verification over one arrangement, with JSON reports.
//!
//! Every sampled case draws from its own generator (seed, check, index), and
//! the first failing case in index order is reported, so reports are
//! byte-identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{is_simplicial, restrict_to_flat, Arrangement, ArrangementKind, Fan, WalkOrder, DEFAULT_RANK_CEILING};
use crate::cover::{
    gaussian, sample_charge, sample_complement_point, ComplexPoint, Cover, GaussianRational, SampleWindow, StabilityPoint,
    WeylGroup, DEFAULT_REFINEMENT_DEPTH,
};
use crate::error::{Error, Result};
use crate::graph::{PositivePath, SkeletonGraph};
use crate::groupoid::{Groupoid, GroupoidWord, WordVerdict};
use crate::io::{StabilityFile, WordFile, SCHEMA_VERSION};
use crate::ktheory::{phi_consistency_check, phi_of_chamber};
use crate::random::{
    case_rng, random_base, random_chamber, random_loop_word, random_positive_loop, random_positive_path, random_rewrite,
};

/// Tunable limits. Defaults: rank ceiling 4, 100 samples per check,
/// word-problem budget 20000, refinement depth 32, seed 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    pub rank_ceiling: usize,
    pub samples: usize,
    pub budget: usize,
    pub refinement_depth: usize,
    pub seed: u64,
    #[serde(skip)]
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            rank_ceiling: DEFAULT_RANK_CEILING,
            samples: 100,
            budget: 20_000,
            refinement_depth: DEFAULT_REFINEMENT_DEPTH,
            seed: 0,
            timing: false,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rank ceiling", self.rank_ceiling),
            ("samples", self.samples),
            ("budget", self.budget),
            ("refinement depth", self.refinement_depth),
        ] {
            if v == 0 {
                return Err(Error::validation(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    #[serde(rename = "arrangement")]
    Arrangement,
    #[serde(rename = "graph")]
    Graph,
    #[serde(rename = "groupoid")]
    Groupoid,
    #[serde(rename = "ktheory")]
    KTheory,
    #[serde(rename = "cover")]
    Cover,
    #[serde(rename = "all")]
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Arrangement => "arrangement",
            Suite::Graph => "graph",
            Suite::Groupoid => "groupoid",
            Suite::KTheory => "ktheory",
            Suite::Cover => "cover",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "arrangement" => Suite::Arrangement,
            "graph" => Suite::Graph,
            "groupoid" => Suite::Groupoid,
            "ktheory" => Suite::KTheory,
            "cover" => Suite::Cover,
            "all" => Suite::All,
            _ => return Err(Error::validation(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub arrangement: String,
    pub suite: Suite,
    pub seed: u64,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

type Outcome = std::result::Result<(), Value>;

fn stream_of(id: &str) -> u64 {
    // FNV-1a: stable across platforms and compiler versions
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

struct Checks<'c> {
    cfg: &'c Config,
    out: Vec<CheckResult>,
}

impl Checks<'_> {
    fn record(&mut self, id: &str, cases: usize, failure: Option<Value>) {
        let status = if failure.is_some() { Status::Fail } else { Status::Pass };
        self.out.push(CheckResult { id: id.to_string(), status, cases, counterexample: failure });
    }

    /// Runs `f` on every item; the first failure in item order is kept.
    fn each<T: Sync>(&mut self, id: &str, items: &[T], f: impl Fn(&T) -> Outcome + Sync) {
        let failure = items.par_iter().find_map_first(|x| f(x).err());
        self.record(id, items.len(), failure);
    }

    /// Runs `f` on `n` seeded cases.
    fn sampled(&mut self, id: &str, n: usize, f: impl Fn(&mut ChaCha8Rng) -> Outcome + Sync) {
        let (seed, stream) = (self.cfg.seed, stream_of(id));
        let failure = (0..n as u64).into_par_iter().find_map_first(|i| {
            f(&mut case_rng(seed, stream, i)).err().map(|v| json!({ "case": i, "detail": v }))
        });
        self.record(id, n, failure);
    }
}

fn check(ok: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn err_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

/// Runs `suite` against `arr`.
pub fn verify(arr: &Arrangement, suite: Suite, cfg: &Config) -> Result<VerifyReport> {
    cfg.validate()?;
    if arr.rank() > cfg.rank_ceiling {
        return Err(Error::validation(format!(
            "rank {} exceeds the configured ceiling {}",
            arr.rank(),
            cfg.rank_ceiling
        )));
    }
    let start = Instant::now();
    let g = SkeletonGraph::build(arr)?;
    let mut checks = Checks { cfg, out: Vec::new() };
    if suite.includes(Suite::Arrangement) {
        arrangement_checks(&mut checks, arr, &g)?;
    }
    if suite.includes(Suite::Graph) {
        graph_checks(&mut checks, &g);
    }
    if suite.includes(Suite::KTheory) {
        ktheory_checks(&mut checks, &g)?;
    }
    if suite.includes(Suite::Groupoid) {
        groupoid_checks(&mut checks, &g)?;
    }
    if suite.includes(Suite::Cover) {
        cover_checks(&mut checks, &g)?;
    }
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        arrangement: arr.descriptor(),
        suite,
        seed: cfg.seed,
        config: cfg.clone(),
        checks: checks.out,
        timing_ms: cfg.timing.then(|| start.elapsed().as_millis()),
    })
}

fn arrangement_checks(c: &mut Checks, arr: &Arrangement, g: &SkeletonGraph) -> Result<()> {
    let n = g.rank();
    c.each("chambers-simplicial", g.chambers(), |ch| {
        let ok = ch.rays.len() == n && ch.frame().det().abs() == 1;
        check(ok, || json!({ "chamber": ch }))
    });
    let seeds: Vec<u64> = (0..3).map(|k| c.cfg.seed.wrapping_add(k)).collect();
    c.each("walk-order-independent", &seeds, |&s| match Fan::build_with(arr, WalkOrder::Shuffled(s)) {
        Ok(f) => check(f.chambers() == g.chambers(), || json!({ "shuffle_seed": s })),
        Err(e) => Err(json!({ "shuffle_seed": s, "error": e.to_string() })),
    });
    let hyperplanes: Vec<usize> = (0..arr.len()).collect();
    c.each("restrictions-simplicial", &hyperplanes, |&h| match restrict_to_flat(arr, &[h]) {
        Ok(r) => check(is_simplicial(&r), || json!({ "flat": [h], "restriction": r })),
        Err(e) => Err(json!({ "flat": [h], "error": e.to_string() })),
    });
    if let ArrangementKind::Coxeter { .. } = arr.kind() {
        let w = WeylGroup::for_arrangement(arr.kind())?;
        let mut orbit = w.chamber_orbit(g)?;
        orbit.sort_unstable();
        orbit.dedup();
        let ok = w.order() == g.num_chambers() && orbit.len() == g.num_chambers();
        c.record(
            "weyl-chamber-orbit",
            1,
            (!ok).then(|| json!({ "weyl_order": w.order(), "chambers": g.num_chambers(), "orbit": orbit.len() })),
        );
    }
    Ok(())
}

fn graph_checks(c: &mut Checks, g: &SkeletonGraph) {
    c.each("arrow-pairing", g.arrows(), |a| {
        let r = g.arrow(g.reverse(a.id));
        let ok = g.reverse(r.id) == a.id
            && r.source == a.target
            && r.target == a.source
            && r.label == a.label
            && r.hyperplane == a.hyperplane;
        check(ok, || json!({ "arrow": a, "reverse": r }))
    });
    c.each("wall-labels", g.chambers(), |ch| {
        let mut hs: Vec<usize> = g.out_arrows(ch.id).map(|a| a.hyperplane).collect();
        let labels: Vec<usize> = g.out_arrows(ch.id).map(|a| a.label).collect();
        hs.sort_unstable();
        hs.dedup();
        let ok = hs.len() == g.rank() && labels == (1..=g.rank()).collect::<Vec<_>>();
        check(ok, || json!({ "chamber": ch.id, "labels": labels }))
    });
    c.sampled("gallery-minimality", c.cfg.samples, |rng| {
        let (a, b) = (random_chamber(g, rng), random_chamber(g, rng));
        let p = g.minimal_gallery(a, b);
        let ok = p.len() == g.distance(a, b) && g.is_minimal(&p) && p.target(g) == b;
        check(ok, || json!({ "from": a, "to": b, "gallery": p }))
    });
}

fn ktheory_checks(c: &mut Checks, g: &SkeletonGraph) -> Result<()> {
    let gr = Groupoid::new(g)?;
    let kt = gr.ktheory();
    c.record("exchange-numbers", g.arrows().len(), None);
    c.each("involution", g.arrows(), |a| {
        let f = kt.arrow_matrix(a.id).entries;
        check(f.mul(&f).is_identity(), || json!({ "arrow": a.id, "matrix": f }))
    });
    c.each("reverse-arrow", g.arrows(), |a| {
        let (f, r) = (kt.arrow_matrix(a.id), kt.arrow_matrix(g.reverse(a.id)));
        check(f.entries == r.entries, || json!({ "arrow": a.id, "matrix": f, "reverse": r }))
    });
    c.each("transpose-duality", g.arrows(), |a| {
        let (f, p) = (kt.arrow_matrix(a.id).entries, kt.phi_step(a.id));
        check(p == f.transpose(), || json!({ "arrow": a.id, "f": f, "phi_step": p }))
    });
    c.each("frame-coherence", g.arrows(), |a| {
        let src = phi_of_chamber(g.chamber(a.source)).map_err(|e| err_value(&e))?.entries;
        let tgt = phi_of_chamber(g.chamber(a.target)).map_err(|e| err_value(&e))?.entries;
        check(tgt == src.mul(&kt.phi_step(a.id)), || json!({ "arrow": a.id, "source_frame": src, "target_frame": tgt }))
    });
    let report = phi_consistency_check(kt)?;
    c.record(
        "phi-consistency",
        report.galleries_checked,
        report.failures.first().map(|f| serde_json::to_value(f).expect("serializable")),
    );
    c.sampled("path-invariance", c.cfg.samples, |rng| {
        let p = random_positive_path(g, rng, 10);
        let m = g.minimal_gallery(p.source(), p.target(g));
        let (fp, fm) = (kt.f_along_path(&p), kt.f_along_path(&m));
        check(fp == fm, || json!({ "path": p, "minimal": m, "path_matrix": fp, "minimal_matrix": fm }))
    });
    c.sampled("loop-triviality", c.cfg.samples, |rng| {
        let at = random_chamber(g, rng);
        let lp = random_positive_loop(g, rng, at, 10);
        let f = kt.f_along_path(&lp);
        check(f.is_identity(), || json!({ "loop": lp, "matrix": f }))
    });
    c.sampled("equivalent-paths-same-k", c.cfg.samples, |rng| {
        let p = random_positive_path(g, rng, 8);
        let q = random_rewrite(&gr, rng, &p, 6);
        check(kt.f_along_path(&p) == kt.f_along_path(&q), || json!({ "p": p, "q": q }))
    });
    Ok(())
}

fn groupoid_checks(c: &mut Checks, g: &SkeletonGraph) -> Result<()> {
    let gr = Groupoid::new(g)?;
    let budget = c.cfg.budget;
    c.each("face-relations", gr.face_relations(), |f| {
        let (l, r) = (
            PositivePath::from_parts(f.chamber, f.left.clone()),
            PositivePath::from_parts(f.chamber, f.right.clone()),
        );
        let ok = g.is_minimal(&l)
            && g.is_minimal(&r)
            && l.target(g) == f.opposite
            && r.target(g) == f.opposite
            && l.len() == r.len()
            && l.len() == g.distance(f.chamber, f.opposite);
        check(ok, || json!({ "chamber": f.chamber, "left": f.left, "right": f.right }))
    });
    c.sampled("minimal-galleries-identified", c.cfg.samples, |rng| {
        let (a, b) = (random_chamber(g, rng), random_chamber(g, rng));
        let gals = g.minimal_galleries(a, b);
        let pick = rng.gen_range(0..gals.len());
        match gr.positive_path_equal_bounded(&gals[0], &gals[pick], budget) {
            Ok(Some(true)) => Ok(()),
            Ok(other) => Err(json!({ "p": gals[0], "q": gals[pick], "verdict": other })),
            Err(e) => Err(err_value(&e)),
        }
    });
    c.sampled("lengths-separate", c.cfg.samples, |rng| {
        let p = random_positive_path(g, rng, 8);
        let t = p.target(g);
        // same endpoints, two steps longer: cross a wall and come back
        let a = g.arrow_with_label(t, rng.gen_range(1..=g.rank())).expect("label in range");
        let q = p.then(g, &PositivePath::from_parts(t, vec![a, g.reverse(a)]));
        match gr.positive_path_equal(&p, &q) {
            Ok(false) => Ok(()),
            Ok(true) => Err(json!({ "p": p, "q": q })),
            Err(e) => Err(err_value(&e)),
        }
    });
    let pres = gr.vertex_presentation();
    let ab = pres.abelianization();
    let ok = ab.is_free() && ab.free_rank == g.arrangement().len();
    c.record(
        "presentation-abelianization",
        1,
        (!ok).then(|| json!({ "abelianization": ab, "hyperplanes": g.arrangement().len() })),
    );
    c.each("presentation-relations", &pres.relations, |r| {
        let w = pres.evaluate(r);
        match gr.groupoid_word_equal(&w, &GroupoidWord::empty(0), budget) {
            Ok(WordVerdict::Equal) => Ok(()),
            Ok(v) => Err(json!({ "relation": r, "verdict": v })),
            Err(e) => Err(err_value(&e)),
        }
    });
    c.sampled("word-k-certificate", c.cfg.samples, |rng| {
        // a word and its free reduction must never be called distinct
        let w = random_loop_word(g, rng, 0, 8);
        match gr.groupoid_word_equal(&w, &w.free_reduce(), budget) {
            Ok(WordVerdict::Equal) => Ok(()),
            Ok(v) => Err(json!({ "word": WordFile::from(&w), "verdict": v })),
            Err(e) => Err(err_value(&e)),
        }
    });
    Ok(())
}

fn cover_checks(c: &mut Checks, g: &SkeletonGraph) -> Result<()> {
    let cov = Cover::new(g)?;
    let arr = g.arrangement();
    let window = SampleWindow::default();
    let n = g.rank();
    let depth = c.cfg.refinement_depth;
    c.sampled("coverage", c.cfg.samples, |rng| {
        let z = sample_complement_point(rng, arr, window);
        let pieces = cov.pieces_containing(&z);
        check(pieces.len() == 1, || json!({ "point": z, "pieces": pieces }))
    });
    c.sampled("disjointness", c.cfg.samples, |rng| {
        let l = random_chamber(g, rng);
        let z = sample_charge(rng, n, window).transform(cov.frame(l));
        let pieces = cov.pieces_containing(&z);
        check(pieces == [l], || json!({ "chamber": l, "point": z, "pieces": pieces }))
    });
    let point = |rng: &mut ChaCha8Rng| -> StabilityPoint {
        let base = random_base(g, rng, 6);
        StabilityPoint::new(g, base, sample_charge(rng, n, window)).expect("sampled charges lie in H")
    };
    c.sampled("projection-lands-in-piece", c.cfg.samples, |rng| {
        let s = point(rng);
        let z = cov.project_p(&s);
        let ok = cov.central_charge(&s) == z && cov.locate(&z).ok() == Some(s.chamber());
        check(ok, || json!({ "point": StabilityFile::from(&s) }))
    });
    c.sampled("deck-equivariance", c.cfg.samples, |rng| {
        let s = point(rng);
        let beta = random_loop_word(g, rng, 0, 8);
        let moved = cov.deck_act(&beta, &s).map_err(|e| err_value(&e))?;
        let ok = cov.project_p(&moved) == cov.project_p(&s) && cov.central_charge(&moved) == cov.central_charge(&s);
        check(ok, || json!({ "point": StabilityFile::from(&s), "loop": WordFile::from(&beta) }))
    });
    c.sampled("same-fiber", c.cfg.samples, |rng| {
        let s = point(rng);
        let beta = random_loop_word(g, rng, 0, 8);
        let moved = cov.deck_act(&beta, &s).map_err(|e| err_value(&e))?;
        let gamma = cov.same_fiber(&s, &moved).map_err(|e| err_value(&e))?;
        let kt = cov.ktheory();
        let ok = gamma.as_ref().is_some_and(|gm| {
            let expect = kt.f_along_word(moved.base()).entries.mul(&kt.f_along_word(s.base()).inverse().entries);
            kt.f_along_word(gm).entries == expect && cov.deck_act(gm, &s).map(|t| t.base().free_reduce()) == Ok(moved.base().free_reduce())
        });
        check(ok, || json!({ "point": StabilityFile::from(&s), "loop": WordFile::from(&beta) }))
    });
    c.sampled("monodromy-rectangles", c.cfg.samples, |rng| {
        let lp = random_rectangle(&cov, rng, window);
        let base = cov.locate(&lp[0]).map_err(|e| err_value(&e))?;
        match cov.monodromy(&lp, base, depth) {
            Ok(m) => check(m.kmatrix.is_identity() && m.word.is_loop(), || json!({ "polyline": lp, "word": WordFile::from(&m.word) })),
            Err(e) => Err(json!({ "polyline": lp, "error": e.to_string() })),
        }
    });
    if let ArrangementKind::Coxeter { .. } = arr.kind() {
        let w = WeylGroup::for_arrangement(arr.kind())?;
        c.sampled("weyl-orbit", c.cfg.samples.min(20), |rng| {
            let z = sample_complement_point(rng, arr, window);
            let size = w.quotient_fiber_size(&z);
            check(size == w.order(), || json!({ "point": z, "orbit": size }))
        });
    }
    Ok(())
}

/// A closed axis-aligned rectangle in one coordinate plane, resampled until
/// it is generic in the sense of [`Cover::polyline_is_generic`].
pub fn random_rectangle<R: Rng + ?Sized>(cov: &Cover, rng: &mut R, window: SampleWindow) -> Vec<ComplexPoint> {
    let arr = cov.graph().arrangement();
    loop {
        let z0 = sample_complement_point(rng, arr, window);
        let k = rng.gen_range(0..arr.rank());
        let dx = gaussian(rng.gen_range(1..=2 * window.num), rng.gen_range(1..=window.den), 0, 1).expect("nonzero denominator");
        let dy = gaussian(0, 1, rng.gen_range(1..=2 * window.num), rng.gen_range(1..=window.den)).expect("nonzero denominator");
        let shift = |z: &ComplexPoint, d: &GaussianRational, sign: i64| {
            let mut v = z.coords().to_vec();
            if sign > 0 {
                v[k] = &v[k] + d;
            } else {
                v[k] = &v[k] - d;
            }
            ComplexPoint::new(v)
        };
        let z1 = shift(&z0, &dx, 1);
        let z2 = shift(&z1, &dy, 1);
        let z3 = shift(&z2, &dx, -1);
        let lp = vec![z0.clone(), z1, z2, z3, z0];
        if cov.polyline_is_generic(&lp) {
            return lp;
        }
    }
}
