//! Stability points, the projection to the complement, and deck transformations.

use stabcover::arrangement::cd4_arrangement;
use stabcover::cover::{ComplexPoint, Cover, StabilityPoint};
use stabcover::graph::{PositivePath, SkeletonGraph};
use stabcover::groupoid::GroupoidWord;

fn main() -> stabcover::Result<()> {
    let g = SkeletonGraph::build(&cd4_arrangement())?;
    let cov = Cover::new(&g)?;

    let z = ComplexPoint::from_ints(&[(-1, 1), (2, 3)]);
    let c = cov.locate(&z)?;
    println!("{z} lies in the piece of chamber {c}");

    let charge = ComplexPoint::from_ints(&[(0, 1), (-1, 2)]);
    let base = GroupoidWord::from_path(&g, &g.minimal_gallery(5, 0));
    let s = StabilityPoint::new(&g, base, charge)?;
    let p = cov.project_p(&s);
    println!("p(s) = {p}, central charge {}", cov.central_charge(&s));
    println!("p(s) lies in piece {}", cov.locate(&p)?);

    // a loop at C+ around the first hyperplane
    let a = g.arrow_with_label(0, 1).unwrap();
    let beta = GroupoidWord::from_path(&g, &PositivePath::new(&g, 0, vec![a, g.reverse(a)])?);
    let t = cov.deck_act(&beta, &s)?;
    println!("deck image projects to {} (unchanged: {})", cov.project_p(&t), cov.project_p(&t) == p);
    let gamma = cov.same_fiber(&s, &t)?.expect("same fibre");
    println!("recovered connecting loop {gamma}");
    Ok(())
}
