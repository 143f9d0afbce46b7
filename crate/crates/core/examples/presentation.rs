//! Vertex-group presentation and its abelianization.

use stabcover::arrangement::{build_coxeter_arrangement, cd4_arrangement, CoxeterType};
use stabcover::graph::SkeletonGraph;
use stabcover::groupoid::{Groupoid, GroupoidWord, WordVerdict};

fn main() -> stabcover::Result<()> {
    for arr in [cd4_arrangement(), build_coxeter_arrangement(CoxeterType::A, 3)?] {
        let g = SkeletonGraph::build(&arr)?;
        let gr = Groupoid::new(&g)?;
        let p = gr.vertex_presentation();
        let ab = p.abelianization();
        println!(
            "{}: {} generators, {} relations, abelianization Z^{} torsion {:?}",
            arr.descriptor(),
            p.generators.len(),
            p.relations.len(),
            ab.free_rank,
            ab.torsion
        );
        let trivial = p
            .relations
            .iter()
            .filter(|r| gr.groupoid_word_equal(&p.evaluate(r), &GroupoidWord::empty(0), 20_000) == Ok(WordVerdict::Equal))
            .count();
        println!("  relations evaluating to the identity: {trivial}/{}", p.relations.len());
    }
    Ok(())
}
