use proptest::prelude::*;

use stabcover::arrangement::{build_coxeter_arrangement, cd4_arrangement, rank2_arrangement, Arrangement, CoxeterType};
use stabcover::cover::{sample_charge, sample_complement_point, ComplexPoint, Cover, SampleWindow, StabilityPoint};
use stabcover::graph::SkeletonGraph;
use stabcover::groupoid::{Groupoid, GroupoidWord, WordVerdict};
use stabcover::io::{from_json, parse_word, to_json, StabilityFile, WordFile};
use stabcover::ktheory::{KMatrix, KTheory};
use stabcover::random::{case_rng, random_base, random_loop_word, random_positive_path, random_rewrite, random_word};

fn arrangement(which: usize) -> Arrangement {
    match which {
        0 => cd4_arrangement(),
        1 => build_coxeter_arrangement(CoxeterType::A, 2).unwrap(),
        2 => build_coxeter_arrangement(CoxeterType::A, 3).unwrap(),
        3 => rank2_arrangement(5).unwrap(),
        _ => rank2_arrangement(6).unwrap(),
    }
}

fn setup(which: usize) -> SkeletonGraph {
    SkeletonGraph::build(&arrangement(which)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewrites_preserve_class_and_kmatrix(which in 0usize..5, seed: u64, steps in 0usize..12) {
        let g = setup(which);
        let gr = Groupoid::new(&g).unwrap();
        let rng = &mut case_rng(seed, 1, 0);
        let p = random_positive_path(&g, rng, 10);
        let q = random_rewrite(&gr, rng, &p, steps);
        prop_assert_eq!(q.len(), p.len());
        prop_assert!(gr.positive_path_equal(&p, &q).unwrap());
        prop_assert!(gr.positive_path_equal(&q, &p).unwrap());
        prop_assert_eq!(gr.ktheory().f_along_path(&p), gr.ktheory().f_along_path(&q));
    }

    #[test]
    fn kmatrices_respect_composition(which in 0usize..5, seed: u64) {
        let g = setup(which);
        let kt = KTheory::new(&g).unwrap();
        let rng = &mut case_rng(seed, 2, 0);
        let u = random_word(&g, rng, 0, 8);
        let v = random_word(&g, rng, u.target(), 8);
        let uv = u.then(&v).unwrap();
        prop_assert_eq!(kt.f_along_word(&uv), kt.f_along_word(&u).then(&kt.f_along_word(&v)));
        prop_assert_eq!(kt.f_along_word(&u.inverse()), kt.f_along_word(&u).inverse());
        prop_assert_eq!(kt.f_along_word(&uv.free_reduce()), kt.f_along_word(&uv));
    }

    #[test]
    fn word_equality_is_reflexive_and_cancels(which in 0usize..5, seed: u64) {
        let g = setup(which);
        let gr = Groupoid::new(&g).unwrap();
        let rng = &mut case_rng(seed, 3, 0);
        let u = random_loop_word(&g, rng, 0, 8);
        let empty = GroupoidWord::empty(0);
        prop_assert_eq!(gr.groupoid_word_equal(&u, &u, 20_000).unwrap(), WordVerdict::Equal);
        let uu = u.then(&u.inverse()).unwrap();
        prop_assert_eq!(gr.groupoid_word_equal(&uu, &empty, 20_000).unwrap(), WordVerdict::Equal);
        // a verdict of distinct must be symmetric
        let v = random_loop_word(&g, rng, 0, 8);
        let uv = gr.groupoid_word_equal(&u, &v, 20_000).unwrap();
        let vu = gr.groupoid_word_equal(&v, &u, 20_000).unwrap();
        prop_assert_eq!(uv == WordVerdict::Distinct, vu == WordVerdict::Distinct);
        if uv == WordVerdict::Equal {
            prop_assert_eq!(gr.ktheory().f_along_word(&u), gr.ktheory().f_along_word(&v));
        }
    }

    #[test]
    fn deck_action_composes(which in 0usize..5, seed: u64) {
        let g = setup(which);
        let cov = Cover::new(&g).unwrap();
        let rng = &mut case_rng(seed, 4, 0);
        let s = StabilityPoint::new(&g, random_base(&g, rng, 6), sample_charge(rng, g.rank(), SampleWindow::default())).unwrap();
        let b1 = random_loop_word(&g, rng, 0, 6);
        let b2 = random_loop_word(&g, rng, 0, 6);
        let twice = cov.deck_act(&b2, &cov.deck_act(&b1, &s).unwrap()).unwrap();
        let once = cov.deck_act(&b1.then(&b2).unwrap(), &s).unwrap();
        prop_assert_eq!(twice.base(), once.base());
        prop_assert_eq!(cov.project_p(&twice), cov.project_p(&s));
        prop_assert_eq!(cov.locate(&cov.project_p(&s)).unwrap(), s.chamber());
        prop_assert_eq!(cov.central_charge(&s), cov.project_p(&s));
    }

    #[test]
    fn located_points_lie_in_their_piece(which in 0usize..5, seed: u64) {
        let g = setup(which);
        let cov = Cover::new(&g).unwrap();
        let z = sample_complement_point(&mut case_rng(seed, 5, 0), g.arrangement(), SampleWindow::default());
        let c = cov.locate(&z).unwrap();
        prop_assert!(cov.in_piece(&z, c));
        prop_assert_eq!(cov.pieces_containing(&z), vec![c]);
    }

    #[test]
    fn json_round_trips(which in 0usize..5, seed: u64) {
        let g = setup(which);
        let kt = KTheory::new(&g).unwrap();
        let rng = &mut case_rng(seed, 6, 0);
        let arr = g.arrangement();
        prop_assert_eq!(&from_json::<Arrangement>(&to_json(arr)).unwrap(), arr);

        let z = sample_complement_point(rng, arr, SampleWindow { num: 1 << 40, den: 1 << 40 });
        prop_assert_eq!(from_json::<ComplexPoint>(&to_json(&z)).unwrap(), z);

        let w = random_word(&g, rng, 0, 10);
        let wf = WordFile::from(&w);
        prop_assert_eq!(&from_json::<WordFile>(&to_json(&wf)).unwrap().into_word(&g).unwrap(), &w);
        prop_assert_eq!(&parse_word(&g, &w.to_string(), Some(w.source())).unwrap(), &w);

        let s = StabilityPoint::new(&g, random_base(&g, rng, 5), sample_charge(rng, g.rank(), SampleWindow::default())).unwrap();
        let back = from_json::<StabilityFile>(&to_json(&StabilityFile::from(&s))).unwrap().into_point(&g).unwrap();
        prop_assert_eq!(back, s);

        let k = kt.f_along_word(&w);
        prop_assert_eq!(from_json::<KMatrix>(&to_json(&k)).unwrap(), k);
    }
}
