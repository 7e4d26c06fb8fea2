#![allow(dead_code)]

use blockcolor::graph::{BlockGraph, Graph};
use proptest::prelude::*;

/// Connected block graphs built by hanging cliques of size 2..=4 off random
/// anchors, then relabelled by a random permutation.
pub fn block_graph(max_n: usize) -> impl Strategy<Value = BlockGraph> {
    prop::collection::vec((any::<prop::sample::Index>(), 2usize..=4), 0..max_n)
        .prop_flat_map(move |steps| {
            let mut g = Graph::empty(1);
            for (anchor, size) in steps {
                if g.n() + size - 1 > max_n {
                    continue;
                }
                let a = anchor.index(g.n());
                g.attach_clique(a, size);
            }
            let n = g.n();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(g, perm)| BlockGraph::new(g.permuted(&perm)).expect("clique attachment keeps blocks complete"))
}

/// Block graphs whose components are each built as in [`block_graph`].
pub fn block_forest(max_n: usize) -> impl Strategy<Value = BlockGraph> {
    (block_graph(max_n / 2 + 1), block_graph(max_n / 2)).prop_map(|(a, b)| {
        BlockGraph::new(a.graph().disjoint_union(b.graph())).expect("disjoint union of block graphs")
    })
}

/// Cut vertices by definition: removal increases the component count.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = g.components().len();
    (0..g.n())
        .filter(|&v| {
            let removed = std::iter::once(v).collect();
            g.without(&removed).0.components().len() > base
        })
        .collect()
}

/// Maximal cliques by subset enumeration; in a block graph without isolated
/// vertices these are exactly the blocks.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let cliques: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| g.is_clique(vs))
        .collect();
    let mut maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|c| {
            !cliques
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v)))
        })
        .cloned()
        .collect();
    maximal.sort();
    maximal
}
