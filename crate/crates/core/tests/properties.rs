use modcomp::bdh::check_bdh_from;
use modcomp::generate::{random_bipartite_dh, random_cograph, random_module_composed};
use modcomp::oracles::is_cograph;
use modcomp::recognize::brute_force_recognize_independent;
use modcomp::*;
use proptest::prelude::*;

/// Graph on 1..=max_n vertices with independent edges.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        any::<u64>()
            .prop_map(move |code| Graph::from_edge_code(n, if pairs == 64 { code } else { code & ((1 << pairs) - 1) }))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn induced_p4_with_midpoint(g: &Graph, vertices: &[usize], mid: usize) -> bool {
    let inside = |x: usize| vertices.contains(&x);
    // mid = b in a-b-c-d: choose c adjacent, a adjacent to b only, d adjacent to c only.
    g.neighbors(mid).iter().copied().filter(|&c| inside(c)).any(|c| {
        let left = g.neighbors(mid).iter().copied().filter(|&a| inside(a) && a != c && !g.has_edge(a, c));
        left.into_iter()
            .any(|a| g.neighbors(c).iter().any(|&d| inside(d) && d != mid && !g.has_edge(d, mid) && !g.has_edge(d, a)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn recognizer_matches_elimination_oracle(g in graph(9)) {
        let fast = recognize(&g);
        let slow = brute_force_recognize(&g).unwrap();
        prop_assert_eq!(fast.is_yes(), slow.is_yes());
        if let Some(seq) = fast.sequence() {
            prop_assert!(verify_module_sequence(&g, seq).unwrap());
        }
        if let Some(seq) = slow.sequence() {
            prop_assert!(verify_module_sequence(&g, seq).unwrap());
        }
    }

    #[test]
    fn verdict_is_label_invariant((g, perm) in graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(recognize(&g).is_yes(), recognize(&h).is_yes());
        prop_assert_eq!(check_bdh(&g), check_bdh(&h));
    }

    #[test]
    fn induced_subgraphs_stay_module_composed(seed in any::<u64>(), n in 2usize..30, drop in any::<u64>()) {
        let (g, _) = random_module_composed(n, seed);
        let removed: Vec<usize> = (0..n).filter(|v| drop >> (v % 64) & 1 == 1).collect();
        let sub = g.without(&removed).unwrap().graph;
        let seq = recognize(&sub).into_sequence();
        prop_assert!(seq.is_some());
        prop_assert!(verify_module_sequence(&sub, &seq.unwrap()).unwrap());
    }

    #[test]
    fn disjoint_unions_stay_module_composed(a in any::<u64>(), b in any::<u64>(), n1 in 1usize..15, n2 in 1usize..15) {
        let (g1, s1) = random_module_composed(n1, a);
        let (g2, s2) = random_module_composed(n2, b);
        let g = g1.disjoint_union(&g2);
        prop_assert!(verify_module_sequence(&g, &s1.concat_shifted(&s2, n1)).unwrap());
        prop_assert!(recognize(&g).is_yes());
    }

    #[test]
    fn level_test_matches_independent_oracle(g in graph(9)) {
        let bdh = check_bdh(&g);
        prop_assert_eq!(bdh, brute_force_recognize_independent(&g).unwrap().is_yes());
        let seq = independent_module_sequence(&g);
        prop_assert_eq!(seq.is_some(), bdh);
        if let Some(seq) = seq {
            prop_assert!(verify_independent_module_sequence(&g, &seq).unwrap());
        }
    }

    #[test]
    fn level_test_ignores_start_vertex(g in graph(9)) {
        let verdicts: Vec<bool> = (0..g.n()).map(|u| check_bdh_from(&g, u).unwrap()).collect();
        prop_assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{:?}", verdicts);
        prop_assert_eq!(verdicts[0], check_bdh(&g));
    }

    #[test]
    fn decomposition_tree_matches_strong_modules(g in graph(10)) {
        let tree = modular_decomposition(&g).unwrap();
        let mut from_tree: Vec<Vec<usize>> = tree.nodes().iter().map(|node| node.vertices.clone()).collect();
        from_tree.sort_by_key(|s| (s.len(), s.clone()));
        let mut expected = strong_modules_bruteforce(&g).unwrap();
        expected.sort_by_key(|s| (s.len(), s.clone()));
        prop_assert_eq!(from_tree, expected);
        for node in tree.inner_nodes() {
            let q = quotient_graph(&g, &tree, node).unwrap();
            let k = q.n();
            match tree.kind(node) {
                NodeKind::Join => prop_assert_eq!(q.m(), k * (k - 1) / 2),
                NodeKind::CoJoin => prop_assert_eq!(q.m(), 0),
                NodeKind::Prime => {
                    prop_assert!(k >= 4);
                    prop_assert_eq!(strong_modules_bruteforce(&q).unwrap().len(), k + 1);
                }
                NodeKind::Leaf(_) => unreachable!(),
            }
        }
    }

    #[test]
    fn cograph_test_matches_p4_freeness(g in graph(10), seed in any::<u64>(), n in 1usize..12) {
        let p4 = NamedGraph::Path(4).build().unwrap();
        prop_assert_eq!(is_cograph(&g), oracles::contains_induced(&g, &p4).unwrap().is_none());
        let c = random_cograph(n, seed);
        prop_assert!(oracles::contains_induced(&c, &p4).unwrap().is_none());
        let co_2c4 = NamedGraph::CoTwoC4.build().unwrap();
        let seq = oracles::cograph_module_sequence(&c).unwrap();
        prop_assert_eq!(seq.is_some(), oracles::contains_induced(&c, &co_2c4).unwrap().is_none());
        if let Some(seq) = seq {
            prop_assert!(verify_module_sequence(&c, &seq).unwrap());
        }
    }

    #[test]
    fn lex_bfs_orders_of_bipartite_dh_graphs(seed in any::<u64>(), n in 1usize..120, starts in any::<[u64; 3]>()) {
        let g = random_bipartite_dh(n, seed).unwrap();
        for s in starts {
            let order = lex_bfs(&g, (s % n as u64) as usize, TieBreak::Seeded(s)).unwrap();
            prop_assert!(verify_independent_module_sequence(&g, &order).unwrap());
        }
    }

    #[test]
    fn lex_bfs_is_semi_perfect_on_module_composed_graphs(seed in any::<u64>(), n in 1usize..14, start in any::<u64>()) {
        let (g, _) = random_module_composed(n, seed);
        if g.is_connected() {
            let order = lex_bfs(&g, (start % n as u64) as usize, TieBreak::Seeded(start)).unwrap();
            let order = order.order();
            for i in 0..n {
                prop_assert!(!induced_p4_with_midpoint(&g, &order[..=i], order[i]), "prefix {:?}", &order[..=i]);
            }
        }
    }
}

#[test]
fn lex_bfs_visits_every_vertex_once() {
    for seed in 0..20 {
        let g = modcomp::generate::random_graph(15, 0.3, seed).unwrap();
        let order = lex_bfs(&g, 0, TieBreak::Seeded(seed)).unwrap();
        let mut sorted = order.clone().into_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..15).collect::<Vec<_>>());
    }
}
