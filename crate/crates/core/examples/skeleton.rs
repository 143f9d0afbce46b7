//! The labelled skeleton graph and its minimal galleries.

use stabcover::arrangement::cd4_arrangement;
use stabcover::graph::SkeletonGraph;

fn main() -> stabcover::Result<()> {
    let g = SkeletonGraph::build(&cd4_arrangement())?;
    for a in g.arrows() {
        println!("arrow {:2}: {} -> {} across wall {} (hyperplane {})", a.id, a.source, a.target, a.label, a.hyperplane);
    }
    let far = (0..g.num_chambers()).max_by_key(|&c| g.distance(0, c)).unwrap();
    println!("antipode of C+ is chamber {far} at distance {}", g.distance(0, far));
    for p in g.minimal_galleries(0, far) {
        println!("  minimal gallery {:?}", p.arrows());
    }
    println!("{}", g.to_dot());
    Ok(())
}
