mod common;

use c123::corpus::RandomCorpus;
use c123::edp::{edp_solve, EdpInstance};
use c123::format::{parse_decomposition, parse_graph, write_decomposition, write_graph};
use c123::graph::{subdivide, ColourSet};
use c123::quantified::{game_qcsp_equivalent, game_winner, qcsp_eval, qcsp_of_game, Player, QcspInstance};
use c123::subgraph::is_isomorphic;
use c123::width::{lift_decomposition_subdivision, pathwidth, VertexOrder};
use c123::Graph;
use common::{path_decomposition_valid, paths_valid};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.1f64..0.8).prop_map(|(n, seed, p)| RandomCorpus::new(seed).graph(n, p))
}

fn listed_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        proptest::collection::vec(1u32..8, n).prop_map(move |bits| {
            let lists = bits.into_iter().map(|b| ColourSet::from_bits(b << 1)).collect();
            g.clone().with_lists(lists).unwrap()
        })
    })
}

fn qcsp(max_n: usize) -> impl Strategy<Value = QcspInstance> {
    (1..=max_n, any::<u64>(), 0.1f64..0.6).prop_map(|(n, seed, p)| RandomCorpus::new(seed).qcsp(n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph_text_round_trip(g in listed_graph(9)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_json_round_trip(g in listed_graph(9)) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn decomposition_text_round_trip(g in graph(8)) {
        let d = pathwidth(&g).unwrap().certificate;
        prop_assert_eq!(parse_decomposition(&write_decomposition(&d)).unwrap(), d);
    }

    #[test]
    fn qcsp_json_round_trip(inst in qcsp(8)) {
        let json = serde_json::to_string(&inst).unwrap();
        prop_assert_eq!(serde_json::from_str::<QcspInstance>(&json).unwrap(), inst);
    }

    #[test]
    fn dropping_list_atoms_never_hurts(inst in qcsp(8)) {
        let mut loose = inst.clone();
        loose.lists.clear();
        if qcsp_eval(&inst).unwrap() {
            prop_assert!(qcsp_eval(&loose).unwrap());
        }
    }

    #[test]
    fn subdivision_lift_is_valid(g in graph(7), k in 1usize..4) {
        let pw = pathwidth(&g).unwrap();
        let lifted = lift_decomposition_subdivision(&g, &pw.certificate, k).unwrap();
        prop_assert!(path_decomposition_valid(&subdivide(&g, k), &lifted.bags));
        prop_assert!(lifted.width() <= pw.value + 2);
    }

    #[test]
    fn subdivisions_compose(g in graph(6), a in 0usize..3, b in 0usize..3) {
        let twice = subdivide(&subdivide(&g, a), b);
        let once = subdivide(&g, (a + 1) * (b + 1) - 1);
        prop_assert!(is_isomorphic(&twice, &once));
    }

    #[test]
    fn edp_ignores_pair_order(g in graph(6), seed in any::<u64>(), min_length in 0usize..3) {
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let mut corpus = RandomCorpus::new(seed);
        let pairs: Vec<(usize, usize)> = (0..3)
            .map(|_| {
                let p = corpus.permutation(n);
                (p[0], p[1])
            })
            .collect();
        let mut reversed = pairs.clone();
        reversed.reverse();
        let a = EdpInstance::new(g.clone(), pairs, min_length).unwrap();
        let b = EdpInstance::new(g, reversed, min_length).unwrap();
        let sa = edp_solve(&a).unwrap();
        let sb = edp_solve(&b).unwrap();
        prop_assert_eq!(sa.is_some(), sb.is_some());
        if let Some(paths) = sa {
            prop_assert!(paths_valid(&a.graph, &a.pairs, min_length, &paths));
        }
    }

    #[test]
    fn game_agrees_with_qcsp_when_universal_is_free(g in graph(7), seed in any::<u64>()) {
        let n = g.vertex_count();
        let order = VertexOrder::new(RandomCorpus::new(seed).permutation(n)).unwrap();
        let roles: Vec<Player> = RandomCorpus::new(seed ^ 1)
            .quantifiers(n)
            .into_iter()
            .map(|q| if q == c123::quantified::Quantifier::Exists { Player::Existential } else { Player::Universal })
            .collect();
        prop_assume!(game_qcsp_equivalent(&g, &order, Some(&roles)));
        let winner = game_winner(&g, &order, 3, Some(&roles)).unwrap();
        let inst = qcsp_of_game(&g, &order, Some(&roles)).unwrap();
        prop_assert_eq!(winner == Player::Existential, qcsp_eval(&inst).unwrap());
    }
}
