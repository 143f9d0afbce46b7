//! Positive path equivalence and the groupoid word problem.

use stabcover::arrangement::rank2_arrangement;
use stabcover::graph::SkeletonGraph;
use stabcover::groupoid::{Groupoid, GroupoidWord};
use stabcover::io::parse_word;

fn main() -> stabcover::Result<()> {
    let g = SkeletonGraph::build(&rank2_arrangement(5)?)?;
    let gr = Groupoid::new(&g)?;
    let far = (0..g.num_chambers()).max_by_key(|&c| g.distance(0, c)).unwrap();
    let gals = g.minimal_galleries(0, far);
    println!("I2(5): {} minimal galleries 0 -> {far}", gals.len());
    println!("  identified: {}", gr.positive_path_equal(&gals[0], &gals[1])?);

    // a full turn around the origin versus the empty loop
    let there = GroupoidWord::from_path(&g, &gals[0]);
    let back = GroupoidWord::from_path(&g, &g.minimal_gallery(far, 0));
    let turn = there.then(&back)?;
    println!("  full turn {turn}: vs empty {}", gr.groupoid_word_equal(&turn, &GroupoidWord::empty(0), 20_000)?);

    let u = parse_word(&g, &format!("{} {}^-1", gals[0].arrows()[0], gals[0].arrows()[0]), None)?;
    println!("  {u} vs empty: {}", gr.groupoid_word_equal(&u, &GroupoidWord::empty(0), 20_000)?);
    Ok(())
}
