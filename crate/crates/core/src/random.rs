//! Seeded random paths, loops and words for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{ChamberId, PositivePath, SkeletonGraph};
use crate::groupoid::{Groupoid, GroupoidWord, Letter};

/// Independent generator for case `index` of stream `stream`, so results do
/// not depend on evaluation order or thread count.
pub fn case_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    rng.set_stream(stream);
    rng
}

pub fn random_chamber<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R) -> ChamberId {
    rng.gen_range(0..g.num_chambers())
}

/// A walk of exactly `len` random wall crossings from `from`.
pub fn random_walk<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, from: ChamberId, len: usize) -> PositivePath {
    let mut at = from;
    let mut arrows = Vec::with_capacity(len);
    for _ in 0..len {
        let a = g.arrow_with_label(at, rng.gen_range(1..=g.rank())).expect("label in range");
        arrows.push(a);
        at = g.arrow(a).target;
    }
    PositivePath::from_parts(from, arrows)
}

/// A positive path from a random chamber, of length at most `max_len`.
pub fn random_positive_path<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, max_len: usize) -> PositivePath {
    let from = random_chamber(g, rng);
    let len = rng.gen_range(0..=max_len);
    random_walk(g, rng, from, len)
}

/// A positive loop at `at`: a random walk closed up by a minimal gallery.
pub fn random_positive_loop<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, at: ChamberId, max_walk: usize) -> PositivePath {
    let len = rng.gen_range(1..=max_walk.max(1));
    let out = random_walk(g, rng, at, len);
    let back = g.minimal_gallery(out.target(g), at);
    out.then(g, &back)
}

/// A random groupoid word from `at` with `len` letters, each forwards or
/// backwards.
pub fn random_word<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, at: ChamberId, len: usize) -> GroupoidWord {
    let mut here = at;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let out = g.arrow_with_label(here, rng.gen_range(1..=g.rank())).expect("label in range");
        if rng.gen_bool(0.5) {
            letters.push(Letter::fwd(out));
            here = g.arrow(out).target;
        } else {
            // traverse the opposite arrow backwards: it ends here
            let into = g.reverse(out);
            letters.push(Letter::back(into));
            here = g.arrow(into).source;
        }
    }
    GroupoidWord::new(g, at, letters).expect("letters compose by construction")
}

/// A groupoid loop at `at`: a random word closed up by a minimal gallery.
pub fn random_loop_word<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, at: ChamberId, max_len: usize) -> GroupoidWord {
    let len = rng.gen_range(0..=max_len);
    let w = random_word(g, rng, at, len);
    let back = GroupoidWord::from_path(g, &g.minimal_gallery(w.target(), at));
    w.then(&back).expect("gallery starts where the word ends")
}

/// A morphism from a random chamber to `C+`.
pub fn random_base<R: Rng + ?Sized>(g: &SkeletonGraph, rng: &mut R, max_len: usize) -> GroupoidWord {
    let from = random_chamber(g, rng);
    let len = rng.gen_range(0..=max_len);
    let w = random_word(g, rng, from, len);
    let back = GroupoidWord::from_path(g, &g.minimal_gallery(w.target(), 0));
    w.then(&back).expect("gallery starts where the word ends")
}

/// `steps` random face-relation rewrites of `p`, staying in its class.
pub fn random_rewrite<R: Rng + ?Sized>(gr: &Groupoid, rng: &mut R, p: &PositivePath, steps: usize) -> PositivePath {
    let mut cur = p.arrows().to_vec();
    for _ in 0..steps {
        let options = gr.rewrites(&cur);
        match options.choose(rng) {
            Some(next) => cur = next.clone(),
            None => break,
        }
    }
    PositivePath::from_parts(p.source(), cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::cd4_arrangement;

    #[test]
    fn generators_produce_valid_objects() {
        let g = SkeletonGraph::build(&cd4_arrangement()).unwrap();
        let gr = Groupoid::new(&g).unwrap();
        for i in 0..50 {
            let mut rng = case_rng(9, 1, i);
            let p = random_positive_path(&g, &mut rng, 10);
            assert!(PositivePath::new(&g, p.source(), p.arrows().to_vec()).is_ok());
            let lp = random_positive_loop(&g, &mut rng, 0, 6);
            assert_eq!(lp.target(&g), 0);
            let w = random_loop_word(&g, &mut rng, 0, 8);
            assert!(w.is_loop() && w.source() == 0);
            let b = random_base(&g, &mut rng, 5);
            assert_eq!(b.target(), 0);
            let q = random_rewrite(&gr, &mut rng, &p, 5);
            assert!(gr.positive_path_equal(&p, &q).unwrap());
        }
    }

    #[test]
    fn case_streams_are_reproducible() {
        let draw = |s, i| case_rng(5, s, i).gen::<u64>();
        assert_eq!(draw(1, 2), draw(1, 2));
        assert_ne!(draw(1, 2), draw(1, 3));
        assert_ne!(draw(1, 2), draw(2, 2));
    }
}
