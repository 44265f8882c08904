mod common;

use proptest::prelude::*;

use onep::crossing::{crossing_number, planarize_multi};
use onep::graph::{canonical_form, Graph};
use onep::planarity::is_planar;
use onep::plan::{validate_outer_witness, validate_witness};
use onep::solver::{solve, Mode, SearchBudget, SearchOptions};

fn graph_strategy(min_n: usize, max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let limit = max_edges.min(all.len());
        proptest::sample::subsequence(all, 0..=limit)
            .prop_map(move |edges| Graph::new(n, edges).expect("simple edges"))
    })
}

fn budget() -> SearchBudget {
    SearchBudget::nodes(20_000_000)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(120))]

    #[test]
    fn agrees_with_naive_search(g in graph_strategy(2, 6, 11)) {
        let v = solve(&g, Mode::OnePlanar, budget(), SearchOptions::default());
        prop_assert!(v.is_definite());
        prop_assert_eq!(v.is_one_planar(), common::naive_one_planar(&g));
        if let Some(w) = &v.witness {
            prop_assert!(validate_witness(&g, w));
        }
    }

    #[test]
    fn outer_agrees_with_naive_search(g in graph_strategy(2, 6, 10)) {
        let v = solve(&g, Mode::OuterOnePlanar, budget(), SearchOptions::default());
        prop_assert!(v.is_definite());
        prop_assert_eq!(v.is_one_planar(), common::naive_outer_one_planar(&g));
        if let Some(w) = &v.witness {
            prop_assert!(validate_outer_witness(&g, w));
        }
    }

    #[test]
    fn deleting_an_edge_keeps_one_planarity(g in graph_strategy(5, 8, 22), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let v = solve(&g, Mode::OnePlanar, budget(), SearchOptions::default());
        prop_assume!(v.is_one_planar());
        let smaller = g.without_edge(pick.index(g.edge_count()));
        let w = solve(&smaller, Mode::OnePlanar, budget(), SearchOptions::default());
        prop_assert!(w.is_one_planar());
    }

    #[test]
    fn relabelling_preserves_verdict(g in graph_strategy(4, 7, 16), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let a = solve(&g, Mode::OnePlanar, budget(), SearchOptions::default());
        let b = solve(&h, Mode::OnePlanar, budget(), SearchOptions::default());
        prop_assert_eq!(a.answer, b.answer);
    }
}

proptest! {
    #![proptest_config(config(40))]

    /// The cheap rules are switched off one group at a time against a
    /// search that keeps only the planarization prune.
    #[test]
    fn every_prune_is_safe_on_dense_graphs(g in graph_strategy(7, 7, 21), mask in 0u8..16) {
        prop_assume!(g.edge_count() >= 14);
        let options = SearchOptions {
            prune_partial: true,
            kite_rule: mask & 1 != 0,
            count_bound: mask & 2 != 0,
            edge_bound: mask & 4 != 0,
            symmetry: mask & 8 != 0,
        };
        let full = solve(&g, Mode::OnePlanar, budget(), SearchOptions::default());
        let bare = solve(&g, Mode::OnePlanar, budget(), options);
        prop_assert!(full.is_definite() && bare.is_definite());
        prop_assert_eq!(full.answer, bare.answer);
    }

    #[test]
    fn crossing_number_properties(g in graph_strategy(4, 7, 13), pick in any::<prop::sample::Index>()) {
        let r = crossing_number(&g, 3, budget());
        prop_assume!(r.value.is_some());
        let cr = r.value.unwrap();
        prop_assert_eq!(cr == 0, is_planar(&g).is_some());
        let plan = r.witness.as_ref().unwrap();
        prop_assert_eq!(plan.len(), cr);
        let mut p = planarize_multi(&g, plan).unwrap();
        prop_assert!(p.embed());
        if g.edge_count() > 0 {
            let smaller = g.without_edge(pick.index(g.edge_count()));
            let s = crossing_number(&smaller, cr, budget());
            prop_assert!(s.value.is_some_and(|c| c <= cr));
        }
        let v = solve(&g, Mode::OnePlanar, budget(), SearchOptions::default());
        if let Some(w) = v.witness {
            prop_assert!(cr <= w.c);
        }
    }
}
