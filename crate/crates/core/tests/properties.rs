//! Invariants as property tests over random graphs.

use proptest::prelude::*;
use urm::exact::{max_urm_bb, max_urm_brute, Budget};
use urm::gadget::{build_gadget, check_structural_bounds, e3c_solve, cover_matching, EdgeType, E3CInstance};
use urm::graph::enumerate::are_isomorphic;
use urm::graph::{line_graph, parse_graph, root_graph, write_graph, Graph, Matching};
use urm::linegraph::{candidate_forests, color_coding_embed, embed_backtrack, p3_filter};
use urm::treewidth::{
    heuristic_tree_decomposition, parse_td, run_tables, solve_treewidth, to_nice, validate_nice, write_td,
};
use urm::verify::{validate_witness, verify_urm_cycle, verify_urm_pm};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            Graph::new(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap()
        })
    })
}

/// A graph with a matching picked greedily from a shuffled edge order.
fn graph_and_matching(max_n: usize) -> impl Strategy<Value = (Graph, Matching)> {
    graph(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(any::<u16>(), m))
    })
    .prop_map(|(g, keys)| {
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by_key(|&i| keys[i]);
        let mut used = vec![false; g.vertex_count()];
        let mut m = Vec::new();
        for i in order {
            let (u, v) = g.edges()[i];
            if keys[i] % 3 != 0 && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                m.push((u, v));
            }
        }
        let m = Matching::new(&g, m).unwrap();
        (g, m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn verifiers_agree((g, m) in graph_and_matching(10)) {
        let a = verify_urm_cycle(&g, &m).unwrap();
        let b = verify_urm_pm(&g, &m).unwrap();
        prop_assert_eq!(a.is_unique(), b.is_unique());
        for c in [a, b] {
            if let Some(w) = &c.witness {
                prop_assert!(validate_witness(&g, &m, w).is_ok());
            }
        }
    }

    #[test]
    fn supersets_of_broken_matchings_stay_broken((g, m) in graph_and_matching(8)) {
        if !verify_urm_cycle(&g, &m).unwrap().is_unique() {
            let mut used = vec![false; g.vertex_count()];
            for &(u, v) in m.edges() {
                used[u] = true;
                used[v] = true;
            }
            for &(u, v) in g.edges() {
                if !used[u] && !used[v] {
                    let bigger = Matching::new(&g, m.edges().iter().copied().chain([(u, v)])).unwrap();
                    prop_assert!(!verify_urm_cycle(&g, &bigger).unwrap().is_unique());
                }
            }
        }
    }

    #[test]
    fn line_graph_shape(h in graph(8)) {
        let l = line_graph(&h);
        prop_assert_eq!(l.graph.vertex_count(), h.edge_count());
        for (i, &(u, v)) in l.host_edge.iter().enumerate() {
            prop_assert_eq!(l.graph.degree(i), h.degree(u) + h.degree(v) - 2);
        }
    }

    #[test]
    fn root_graph_round_trip(h in graph(7)) {
        let l = line_graph(&h).graph;
        if l.vertex_count() > 0 && l.is_connected() {
            let r = root_graph(&l).unwrap().expect("a line graph has a root");
            prop_assert!(are_isomorphic(&line_graph(&r.root).graph, &l));
        }
    }

    #[test]
    fn branch_and_bound_matches_brute(g in graph(11)) {
        let bb = max_urm_bb(&g, Budget::unlimited(), None);
        prop_assert!(bb.optimal);
        prop_assert_eq!(bb.size, max_urm_brute(&g).unwrap().size);
        prop_assert!(verify_urm_cycle(&g, &bb.matching).unwrap().is_unique());
    }

    #[test]
    fn treewidth_matches_brute_with_bounded_tables(g in graph(10)) {
        let ntd = to_nice(&heuristic_tree_decomposition(&g), &g).unwrap();
        prop_assert!(validate_nice(&ntd, &g).is_ok());
        let s = solve_treewidth(&g, &ntd).unwrap();
        prop_assert_eq!(s.solution.size, max_urm_brute(&g).unwrap().size);
        prop_assert!(verify_urm_pm(&g, &s.solution.matching).unwrap().is_unique());
        for t in run_tables(&g, &ntd, None).unwrap() {
            let b = t.bag.len() as u32;
            let c = t.counters();
            prop_assert!(c.colorings as u64 <= 3u64.pow(b));
            prop_assert!((c.matrices as u128) <= 1u128 << (b * b.saturating_sub(1) / 2));
        }
    }

    #[test]
    fn decomposition_text_round_trip(g in graph(12)) {
        let td = heuristic_tree_decomposition(&g);
        let back = parse_td(&write_td(&td, g.vertex_count())).unwrap();
        prop_assert!(back.validate(&g).is_ok());
        prop_assert_eq!(back.bags, td.bags);
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn colour_coding_finds_what_backtracking_finds(h in graph(9), pick in 0usize..40, seed in any::<u64>()) {
        let forests: Vec<_> = (1..=2).flat_map(|l| candidate_forests(l).unwrap()).collect();
        let f = &forests[pick % forests.len()].forest;
        let exact = embed_backtrack(f, &h).unwrap();
        let cc = color_coding_embed(f, &h, 1e-9, seed).unwrap();
        if let Some(e) = &cc {
            prop_assert!(e.is_valid(f, &h));
        }
        if exact.is_some() {
            prop_assert!(cc.is_some());
        } else {
            prop_assert!(cc.is_none());
        }
    }
}

#[test]
fn filter_outputs_are_decompositions() {
    for l in 1..=5 {
        for f in candidate_forests(l).unwrap() {
            assert_eq!(f.forest.edge_count(), 2 * l);
            assert!((2 * l + 1..=3 * l).contains(&f.forest.vertex_count()));
            if let Some(d) = p3_filter(&f.forest) {
                assert!(d.is_valid_for(&f.forest), "{}", f.canonical_key);
                assert_eq!(d.paths.len(), l);
            }
        }
    }
}

fn e3c_family() -> impl Strategy<Value = Vec<E3CInstance>> {
    let triple = proptest::sample::subsequence((1..=6).collect::<Vec<usize>>(), 3).prop_map(|v| [v[0], v[1], v[2]]);
    let inst = proptest::collection::vec(triple, 1..5).prop_map(|ts| E3CInstance::new(6, ts).unwrap());
    proptest::collection::vec(inst, 1..4).prop_map(|mut v| {
        let mut seen = Vec::new();
        v.retain(|i| {
            let fresh = !seen.contains(&i.triples);
            seen.push(i.triples.clone());
            fresh
        });
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gadget_witnesses_pass_structural_checks(family in e3c_family()) {
        let layout = build_gadget(&family).unwrap();
        let c = layout.collection.len();
        let count = |t: EdgeType| layout.edge_types.iter().filter(|&&x| x == t).count();
        prop_assert_eq!(count(EdgeType::I), 4 * layout.n);
        prop_assert_eq!(count(EdgeType::IV), 4 * c);
        prop_assert_eq!(count(EdgeType::V), family.len());
        prop_assert_eq!(count(EdgeType::IIVertical), 6 * c);
        for (q, inst) in family.iter().enumerate() {
            if let Some(cover) = e3c_solve(inst).unwrap() {
                let m = cover_matching(&layout, q, &cover).unwrap();
                let rep = check_structural_bounds(&layout, &m).unwrap();
                prop_assert_eq!(rep.sad_count(), layout.n / 3);
                prop_assert_eq!(rep.type_ii, 2 * layout.n);
            }
        }
    }
}
