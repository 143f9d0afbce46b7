//! Weyl group orbits on chambers and on generic points.

use stabcover::arrangement::{build_coxeter_arrangement, CoxeterType};
use stabcover::cover::{sample_complement_point, SampleWindow, WeylGroup};
use stabcover::graph::SkeletonGraph;
use stabcover::random::case_rng;

fn main() -> stabcover::Result<()> {
    for (ty, n) in [(CoxeterType::A, 3), (CoxeterType::D, 4)] {
        let arr = build_coxeter_arrangement(ty, n)?;
        let g = SkeletonGraph::build(&arr)?;
        let w = WeylGroup::for_arrangement(arr.kind())?;
        let orbit = w.chamber_orbit(&g)?;
        println!("{ty}{n}: |W| = {}, chamber orbit of C+ has {} chambers of {}", w.order(), orbit.len(), g.num_chambers());
        let z = sample_complement_point(&mut case_rng(1, 0, 0), &arr, SampleWindow::default());
        println!("  generic point orbit size {}", w.quotient_fiber_size(&z));
    }
    Ok(())
}
