//! Exchange numbers, K-matrices and the frame-coherence check.

use stabcover::arrangement::{build_coxeter_arrangement, cd4_arrangement, CoxeterType};
use stabcover::graph::SkeletonGraph;
use stabcover::ktheory::{phi_consistency_check, KTheory};

fn main() -> stabcover::Result<()> {
    let g = SkeletonGraph::build(&cd4_arrangement())?;
    let kt = KTheory::new(&g)?;
    for a in g.out_arrows(0) {
        let f = kt.arrow_matrix(a.id);
        println!("F for arrow {} (wall {}): {:?}", a.id, a.label, f.entries.rows());
        println!("  squares to identity: {}", f.then(&kt.arrow_matrix(g.reverse(a.id))).is_identity());
    }
    let gal = g.minimal_gallery(0, 7);
    println!("K along minimal gallery {:?}: {:?}", gal.arrows(), kt.f_along_path(&gal).entries.rows());

    let a3 = SkeletonGraph::build(&build_coxeter_arrangement(CoxeterType::A, 3)?)?;
    let report = phi_consistency_check(&KTheory::new(&a3)?)?;
    println!("A3 frame coherence: {} galleries checked, {} failures", report.galleries_checked, report.failures.len());
    Ok(())
}
