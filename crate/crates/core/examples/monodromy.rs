//! Lifting a loop around a complexified hyperplane.

use stabcover::arrangement::cd4_arrangement;
use stabcover::cover::{ComplexPoint, Cover, DEFAULT_REFINEMENT_DEPTH};
use stabcover::graph::SkeletonGraph;

fn main() -> stabcover::Result<()> {
    let g = SkeletonGraph::build(&cd4_arrangement())?;
    let cov = Cover::new(&g)?;
    let rect: Vec<ComplexPoint> = [(1, 1), (1, -1), (-1, -1), (-1, 1), (1, 1)]
        .iter()
        .map(|&z1| ComplexPoint::from_ints(&[z1, (0, 10)]))
        .collect();
    let m = cov.monodromy(&rect, cov.locate(&rect[0])?, DEFAULT_REFINEMENT_DEPTH)?;
    println!("loop around z1 = 0: word {}, K-matrix identity: {}", m.word, m.kmatrix.is_identity());

    let constant = [rect[0].clone()];
    let m = cov.monodromy(&constant, cov.locate(&rect[0])?, DEFAULT_REFINEMENT_DEPTH)?;
    println!("constant loop: word length {}", m.word.len());

    let through = [ComplexPoint::from_ints(&[(1, 1), (0, 1)]), ComplexPoint::from_ints(&[(-1, -1), (0, 1)])];
    let closed = [through[0].clone(), through[1].clone(), through[0].clone()];
    println!("loop through z1 = 0: {:?}", cov.monodromy(&closed, 0, DEFAULT_REFINEMENT_DEPTH).unwrap_err().to_string());
    Ok(())
}
