mod common;

use acsep_core::separators::{crosses, is_minimal_separator};
use acsep_core::triangulation::{
    eliminate, is_chordal, is_perfect_elimination_order, mcs_m, minimal_separators_chordal, minimalize, triangulate,
    verify_minimal, Method, Strategy,
};
use acsep_core::VertexSet;
use proptest::prelude::*;

use common::{connected_graphs, graphs};

const STRATEGIES: [Strategy; 3] = [Strategy::MinDegree, Strategy::MinFill, Strategy::MinAverageFill];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn elimination_game_identity(g in graphs(1, 16)) {
        for strategy in STRATEGIES {
            let run = eliminate(&g, strategy).unwrap();
            prop_assert!(is_perfect_elimination_order(&run.h, &run.order));
            for (i, rec) in run.fill_records.iter().enumerate() {
                prop_assert_eq!(rec.vertex, run.order[i]);
                let later = VertexSet::new(run.order[i + 1..].iter().copied());
                let comp = g
                    .components(&later)
                    .unwrap()
                    .into_iter()
                    .find(|c| c.contains(rec.vertex))
                    .unwrap();
                prop_assert_eq!(&g.neighborhood(&comp).unwrap(), &rec.neighborhood);
            }
        }
    }

    #[test]
    fn minimal_triangulation_separators(g in connected_graphs(1, 16)) {
        for method in [Method::Mmd, Method::Mmf, Method::Mmaf, Method::Mcsm] {
            let t = triangulate(&g, method).unwrap();
            prop_assert!(is_chordal(&t.h));
            prop_assert!(t.minimal_claimed);
            prop_assert!(verify_minimal(&g, &t));
            let seps: Vec<VertexSet> =
                minimal_separators_chordal(&t.h).unwrap().into_iter().map(|s| s.vertices).collect();
            for (i, a) in seps.iter().enumerate() {
                prop_assert!(is_minimal_separator(&g, a).unwrap());
                for b in &seps[i + 1..] {
                    prop_assert!(!crosses(&g, a, b).unwrap());
                    prop_assert!(!crosses(&t.h, a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn plain_elimination_is_a_triangulation(g in connected_graphs(1, 16)) {
        for method in [Method::Md, Method::Mf, Method::Maf] {
            let t = triangulate(&g, method).unwrap();
            prop_assert!(is_chordal(&t.h));
            prop_assert!(g.edges().all(|(u, v)| t.h.has_edge(u, v)));
        }
    }
}

#[test]
fn thousand_random_graphs_are_minimally_triangulated() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let g = common::corpus_graph(&mut rng, i, 2, 30);
        for t in [
            minimalize(&g, Strategy::MinAverageFill).unwrap(),
            minimalize(&g, Strategy::MinDegree).unwrap(),
            mcs_m(&g).unwrap(),
        ] {
            assert!(verify_minimal(&g, &t), "{:?} not minimal on {:?}", t.method, common::edges1(&g));
        }
    }
}
