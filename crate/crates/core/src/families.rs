//! Named block-graph families.

use crate::graph::{BlockGraph, Graph};

/// `K_k` with `k + 1` pendant copies of `K_{k+1}` hanging from each of its
/// vertices. The central clique is `0..k`. Has `k³ + k² + k` vertices,
/// equitable chromatic number `k + 2` and lower bound `k + 1`.
pub fn clique_with_pendants(k: usize) -> BlockGraph {
    assert!(k >= 2, "family is defined for k >= 2");
    let mut g = Graph::complete(k);
    for v in 0..k {
        for _ in 0..=k {
            g.attach_clique(v, k + 1);
        }
    }
    BlockGraph::trusted(g)
}

/// Star of cliques: blocks of the given sizes sharing vertex 0.
pub fn clique_star(sizes: &[usize]) -> BlockGraph {
    let mut g = Graph::empty(1);
    for &s in sizes {
        g.attach_clique(0, s);
    }
    BlockGraph::trusted(g)
}

pub fn path(n: usize) -> BlockGraph {
    BlockGraph::trusted(Graph::path(n))
}

pub fn complete(n: usize) -> BlockGraph {
    BlockGraph::trusted(Graph::complete(n))
}

/// Complete bipartite graph `K_{a,b}`; not a block graph for `a, b >= 2`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |w| (u, w))))
        .expect("bipartite edges are in range")
}
