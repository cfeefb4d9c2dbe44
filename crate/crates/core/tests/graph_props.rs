mod common;

use agglom_core::{
    connected_components, enumerate_connected_subgraphs, is_acyclic, spanning_trees, tree_packing_number, Multigraph,
};
use common::*;
use proptest::prelude::*;

/// Largest number of pairwise edge-disjoint spanning trees, by exhaustive search.
fn brute_tree_packing(g: &Multigraph) -> usize {
    let masks: Vec<u32> =
        brute_spanning_trees(g).iter().map(|t| t.edges.iter().fold(0u32, |m, &e| m | 1 << e)).collect();
    fn best(masks: &[u32], from: usize, used: u32) -> usize {
        let mut top = 0;
        for i in from..masks.len() {
            if masks[i] & used == 0 {
                top = top.max(1 + best(masks, i + 1, used | masks[i]));
            }
        }
        top
    }
    best(&masks, 0, 0)
}

#[test]
fn isomorphism_classes_of_small_simple_graphs() {
    // 1 + 1 + 2 + 4 + 11 simple graphs on 0..=4 vertices.
    assert_eq!(graphs_up_to_iso(4, 6, true).len(), 19);
    // Multigraphs on 2 vertices with up to 3 edges, plus the null and trivial graphs.
    assert_eq!(graphs_up_to_iso(2, 3, false).len(), 2 + 4);
}

#[test]
fn connected_subgraphs_match_brute_force() {
    for g in graphs_up_to_iso(5, 7, false) {
        let mut got = enumerate_connected_subgraphs(&g).unwrap_or_default();
        got.sort();
        assert_eq!(got, brute_connected_subgraphs(&g), "{g:?}");
    }
}

#[test]
fn tree_packing_matches_exhaustive_search() {
    for g in graphs_up_to_iso(5, 7, false).into_iter().filter(|g| g.order() >= 2 && g.is_connected()) {
        assert_eq!(tree_packing_number(&g).unwrap(), brute_tree_packing(&g), "{g:?}");
    }
}

#[test]
fn acyclic_exactly_when_components_are_trees() {
    for g in graphs_up_to_iso(5, 6, false) {
        let comps = connected_components(&g);
        let unique_trees = comps.iter().all(|c| brute_spanning_trees(&g.extract(c)).len() == 1);
        let forest = unique_trees && g.size() + comps.len() == g.order();
        assert_eq!(is_acyclic(&g), forest, "{g:?}");
    }
}

proptest! {
    #[test]
    fn components_partition_the_graph(g in arb_graph(7, 9)) {
        let comps = connected_components(&g);
        let mut vs: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        let mut es: Vec<usize> = comps.iter().flat_map(|c| c.edges.clone()).collect();
        vs.sort();
        es.sort();
        prop_assert_eq!(vs, (0..g.order()).collect::<Vec<_>>());
        prop_assert_eq!(es, (0..g.size()).collect::<Vec<_>>());
        for c in &comps {
            prop_assert!(c.is_connected_in(&g));
            for &e in &c.edges {
                let (a, b) = g.ends(e);
                prop_assert!(c.contains_vertex(a) && c.contains_vertex(b));
            }
        }
    }

    #[test]
    fn spanning_trees_match_brute_force(g in arb_connected(5, 7)) {
        let mut got = spanning_trees(&g).unwrap();
        got.sort();
        prop_assert_eq!(got, brute_spanning_trees(&g));
    }

    #[test]
    fn degrees_sum_to_twice_the_size(g in arb_graph(7, 10)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }
}
