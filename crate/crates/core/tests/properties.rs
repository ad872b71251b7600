mod common;

use proptest::prelude::*;

use prext::detect::{find_hole, is_meyniel, is_meyniel_definitional, Parity};
use prext::harness::{self, decode_graph, encode_graph, enumerate_clique_families, enumerate_labeled_graphs, Check, Violation};
use prext::io;
use prext::solve::{chromatic_number, clique_number, count_extensions, max_clique, prext_optimize};
use prext::{classify, cocontract, contract, lift_coloring, CliqueFamily, Graph, SolverConfig, StableFamily, VertexSet};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in common::graph_strategy(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.complement(), common::complement(&g));
    }

    #[test]
    fn cliques_are_stable_in_the_complement(g in common::graph_strategy(12), mask in any::<u64>()) {
        let s = VertexSet(mask & g.vertices().0);
        prop_assert_eq!(g.is_clique(s), g.complement().is_stable(s));
        prop_assert_eq!(g.is_stable(s), g.complement().is_clique(s));
    }

    #[test]
    fn chordless_paths_match_subset_oracle(g in common::graph_strategy(8), u in 0usize..8, v in 0usize..8, max_len in 0usize..8) {
        prop_assume!(u < g.n() && v < g.n() && u != v);
        let got: Vec<Vec<usize>> = g.chordless_paths_between(u, v, max_len).collect();
        let set: std::collections::BTreeSet<_> = got.iter().cloned().collect();
        prop_assert_eq!(set.len(), got.len(), "paths repeated");
        prop_assert_eq!(set, common::chordless_paths(&g, u, v, max_len));
    }

    #[test]
    fn holes_match_subset_oracle(g in common::graph_strategy(9)) {
        for (parity, odd, min) in [(Parity::Any, None, 4), (Parity::Odd, Some(true), 5), (Parity::Even, Some(false), 4), (Parity::Any, None, 6)] {
            let w = find_hole(&g, parity, min);
            prop_assert_eq!(w.as_ref().map(|w| w.vertices.len()), common::shortest_hole(&g, odd, min));
            if let Some(w) = w {
                prop_assert!(w.verify(&g));
            }
        }
    }

    #[test]
    fn class_report_witnesses_check_out(g in common::graph_strategy(9)) {
        let r = classify(&g);
        prop_assert!(r.verify(&g));
        prop_assert_eq!(r.is_meyniel, is_meyniel_definitional(&g).unwrap());
        prop_assert_eq!(r.is_co_meyniel, is_meyniel(&g.complement()).0);
        // Meyniel implies Artemis implies Berge.
        prop_assert!(!r.is_meyniel || r.is_artemis);
        prop_assert!(!r.is_artemis || r.is_berge);
    }

    #[test]
    fn contraction_and_cocontraction_are_dual((g, labels) in common::graph_with_labels(9)) {
        let classes = common::family_from_labels(&g, &labels, true);
        let q = CliqueFamily::new(&g, classes.clone()).unwrap();
        let co = cocontract(&g, &q).unwrap();
        let stable = StableFamily::new(&g.complement(), classes).unwrap();
        let c = contract(&g.complement(), &stable).unwrap();
        prop_assert_eq!(&co.graph.complement(), &c.graph);
        prop_assert!(co.graph.is_stable(co.class_vertices()));
        prop_assert!(c.graph.is_clique(c.class_vertices()));
        prop_assert_eq!(co.graph.n(), g.n() - q.covered().len() + q.len());
    }

    #[test]
    fn lifted_colorings_extend_the_family((g, labels) in common::graph_with_labels(8)) {
        let q = StableFamily::new(&g, common::family_from_labels(&g, &labels, false)).unwrap();
        let res = contract(&g, &q).unwrap();
        let (chi, coloring) = chromatic_number(&res.graph).unwrap();
        let lifted = lift_coloring(&res, &coloring).unwrap();
        prop_assert!(lifted.is_valid(&g));
        prop_assert!(lifted.extends(q.classes()));
        prop_assert_eq!(lifted.num_colors(), chi);
    }

    #[test]
    fn chromatic_and_clique_numbers_match_brute_force(g in common::graph_strategy(7)) {
        let (chi, coloring) = chromatic_number(&g).unwrap();
        let omega = clique_number(&g);
        prop_assert!(coloring.is_valid(&g));
        prop_assert_eq!(coloring.num_colors(), chi);
        prop_assert!(chi >= omega);
        prop_assert_eq!(chi, common::chromatic_number(&g));
        prop_assert_eq!(omega, common::clique_number(&g));
        prop_assert!(g.is_clique(max_clique(&g)));
    }

    #[test]
    fn prext_optimum_matches_backtracking((g, labels) in common::graph_with_labels(9)) {
        let classes = common::family_from_labels(&g, &labels, false);
        let q = StableFamily::new(&g, classes.clone()).unwrap();
        let a = prext_optimize(&g, &q, &SolverConfig::default()).unwrap();
        let x = a.extension.unwrap();
        prop_assert!(x.is_proper(&g) && x.extends(&classes));
        prop_assert_eq!(a.colors_used, Some(common::min_extension(&g, &classes)));
    }

    #[test]
    fn extension_counts_match_assignment_enumeration((g, labels) in common::graph_with_labels(6), k in 1usize..=6) {
        prop_assume!(k <= g.n());
        let classes = common::family_from_labels(&g, &labels, false);
        let q = StableFamily::new(&g, classes.clone()).unwrap();
        let direct = count_extensions(&g, &q, k).unwrap();
        prop_assert_eq!(direct, common::count_extensions(&g, &classes, k));
        prop_assert_eq!(direct, harness::brute_force_contracted_count(&g, &q, k).unwrap());
    }

    #[test]
    fn writers_round_trip((g, labels) in common::graph_with_labels(12)) {
        prop_assert_eq!(io::parse_dimacs(&io::write_dimacs(&g)).unwrap().graph, g.clone());
        prop_assert_eq!(io::parse_edge_list(&io::write_edge_list(&g)).unwrap().graph, g.clone());
        prop_assert_eq!(decode_graph(&encode_graph(&g)).unwrap(), g.clone());
        let classes = common::family_from_labels(&g, &labels, true);
        prop_assert_eq!(io::parse_family(&io::write_family(&classes)).unwrap(), classes);
    }
}

#[test]
fn clique_family_counts_match_naive_enumeration() {
    for n in 1..=4 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let got = enumerate_clique_families(&g).unwrap().count();
            assert_eq!(got, common::clique_family_count(&g), "{g:?}");
        }
    }
}

#[test]
fn labeled_enumeration_is_exhaustive_and_distinct() {
    let all: std::collections::HashSet<Graph> = enumerate_labeled_graphs(5).unwrap().collect();
    assert_eq!(all.len(), 1024);
}

#[test]
fn violations_replay_from_json() {
    // A holding instance serialized as a violation does not replay as a failure.
    let g = Graph::complete(4).unwrap();
    let v = Violation {
        graph: encode_graph(&g),
        family: "q 1: 0 1\n".to_string(),
        check: Check::Theorem2,
        witness: None,
        detail: String::new(),
    };
    let back: Violation = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(back, v);
    assert!(!back.replay().unwrap());

    let bad = Violation { family: "q 1: 0 9\n".to_string(), ..v.clone() };
    assert!(bad.replay().is_err());

    // The pqz configuration that breaks the literal statement replays as a
    // non-instance because z sees p0.
    let pqz = Violation {
        graph: "6: 0-1 0-2 0-3 0-4 1-2 1-3 1-4 2-3 2-5 3-5 4-5".to_string(),
        family: String::new(),
        check: Check::LemmaPqz { clique: vec![0, 2], path: vec![1, 4, 5], z: 3 },
        witness: None,
        detail: String::new(),
    };
    assert!(!pqz.replay().unwrap());
}

#[test]
fn reports_round_trip_through_json() {
    let r = harness::verify_theorem2(5, 0, 3).unwrap();
    let back: harness::VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert!(back.violations.iter().all(|v| v.replay().unwrap()));
}
