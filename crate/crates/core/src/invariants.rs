//! Independence parameters, distance to cluster, AIS tests and the
//! lower/upper windows for the equitable chromatic number.
//!
//! Everything here uses exact integer arithmetic. The independence number
//! is computed by simplicial elimination, which is exact on chordal graphs
//! and therefore on block graphs; the brute-force counterparts used to
//! cross-check these live in [`crate::oracle`].

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::decompose;
use crate::graph::{BlockGraph, Graph, GraphError};

/// Default vertex cap for the exponential distance-to-cluster search.
pub const DEFAULT_DC_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {w} lies in the closed neighbourhood of {v}")]
    WIsInClosedNeighborhood { v: usize, w: usize },
}

fn simplicial_in(g: &Graph, alive: &[bool], v: usize) -> bool {
    let ns: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
    g.is_clique(&ns)
}

/// Greedy maximum independent set on the alive part of a chordal graph.
/// Consumes `alive`.
pub(crate) fn alpha_alive(g: &Graph, alive: &mut [bool]) -> usize {
    let mut size = 0;
    loop {
        let Some(v) = (0..g.n()).find(|&v| alive[v] && simplicial_in(g, alive, v)) else {
            debug_assert!(alive.iter().all(|a| !a), "chordal graphs always have a simplicial vertex");
            return size;
        };
        size += 1;
        alive[v] = false;
        for &w in g.neighbors(v) {
            alive[w] = false;
        }
    }
}

pub(crate) fn alpha_graph(g: &Graph) -> usize {
    alpha_alive(g, &mut vec![true; g.n()])
}

/// α of `g - N[v]`.
pub(crate) fn alpha_outside(g: &Graph, v: usize) -> usize {
    let mut alive = vec![true; g.n()];
    alive[v] = false;
    for &w in g.neighbors(v) {
        alive[w] = false;
    }
    alpha_alive(g, &mut alive)
}

pub(crate) fn alpha_with_graph(g: &Graph, v: usize) -> usize {
    1 + alpha_outside(g, v)
}

/// Size of a largest independent set.
pub fn alpha(g: &BlockGraph) -> usize {
    alpha_graph(g)
}

/// Size of a largest independent set containing `v`.
pub fn alpha_with(g: &BlockGraph, v: usize) -> Result<usize, InvariantError> {
    g.check_vertex(v)?;
    Ok(alpha_with_graph(g, v))
}

/// Minimum of α(G, v) over all vertices, with the smallest witness.
///
/// On a connected graph with a cut vertex only the cut vertices and one
/// simplicial vertex are scanned: all simplicial vertices attain α(G).
pub fn alpha_min(g: &BlockGraph) -> Result<(usize, usize), InvariantError> {
    alpha_min_graph(g)
}

pub(crate) fn alpha_min_graph(g: &Graph) -> Result<(usize, usize), InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let dec = crate::decomposition::decompose_graph(g);
    let candidates: Vec<usize> = if g.is_connected() && !dec.cut_vertices.is_empty() {
        let mut c = dec.cut_vertices.clone();
        if let Some(s) = (0..g.n()).find(|&v| dec.is_simplicial(v)) {
            c.push(s);
        }
        c.sort_unstable();
        c
    } else {
        (0..g.n()).collect()
    };
    let best = candidates
        .into_iter()
        .map(|v| (alpha_with_graph(g, v), v))
        .min()
        .expect("candidate set is nonempty");
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DcResult {
    pub count: usize,
    pub set: Vec<usize>,
}

/// Distance to cluster: a smallest vertex set whose removal leaves a
/// disjoint union of cliques. Searches deletion sets by increasing size in
/// lexicographic order and returns the first hit.
pub fn dc_exact(g: &BlockGraph, cap: usize) -> Result<DcResult, InvariantError> {
    dc_graph(g, cap)
}

pub(crate) fn dc_graph(g: &Graph, cap: usize) -> Result<DcResult, InvariantError> {
    let n = g.n();
    if n > cap {
        return Err(InvariantError::TooLarge { n, cap });
    }
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let removed: BTreeSet<usize> = combo.iter().copied().collect();
            if g.without(&removed).0.is_cluster() {
                return Ok(DcResult {
                    count: size,
                    set: combo,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("deleting every vertex leaves the empty cluster graph")
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

pub(crate) fn is_ais_graph(g: &Graph, w: usize) -> bool {
    if g.degree(w) == 0 {
        return true;
    }
    let own = alpha_outside(g, w);
    g.neighbors(w).iter().all(|&wj| own > alpha_outside(g, wj))
}

/// Whether `w` lies in every maximum independent set.
pub fn is_ais(g: &BlockGraph, w: usize) -> Result<bool, InvariantError> {
    g.check_vertex(w)?;
    Ok(is_ais_graph(g, w))
}

/// Whether `w` lies in every maximum independent set among those that
/// contain `v`, i.e. `w` is AIS in `g - N[v]`.
pub fn is_v_ais(g: &BlockGraph, v: usize, w: usize) -> Result<bool, InvariantError> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if w == v || g.has_edge(v, w) {
        return Err(InvariantError::WIsInClosedNeighborhood { v, w });
    }
    Ok(v_ais_graph(g, v, w))
}

/// Total version of the v-AIS test: `v` itself is trivially v-AIS, and a
/// neighbour of `v` never lies in a set containing `v`.
pub(crate) fn v_ais_graph(g: &Graph, v: usize, w: usize) -> bool {
    if w == v {
        return true;
    }
    if g.has_edge(v, w) {
        return false;
    }
    let (residual, map) = g.without(&g.closed_neighborhood(v));
    let local = map.iter().position(|&old| old == w).expect("w survives deletion of N[v]");
    is_ais_graph(&residual, local)
}

/// All structural parameters plus the conjectured window
/// `[L, L + 1]` with `L = max{ω, ⌈(n+1)/(α_min+1)⌉}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub n: usize,
    pub alpha: usize,
    pub alpha_min: usize,
    pub alpha_min_witness: usize,
    pub omega: usize,
    pub delta: usize,
    pub dc: Option<usize>,
    pub dc_set: Option<Vec<usize>>,
    pub lower_bound: usize,
    pub window: [usize; 2],
    pub hs_upper: usize,
}

pub fn lower_bound(n: usize, omega: usize, alpha_min: usize) -> usize {
    omega.max((n + 1).div_ceil(alpha_min + 1))
}

pub fn bounds_report(g: &BlockGraph) -> Result<ParamReport, InvariantError> {
    bounds_report_with_cap(g, DEFAULT_DC_CAP)
}

pub fn bounds_report_with_cap(g: &BlockGraph, dc_cap: usize) -> Result<ParamReport, InvariantError> {
    let (amin, witness) = alpha_min(g)?;
    let omega = decompose(g).omega();
    let dc = match dc_exact(g, dc_cap) {
        Ok(r) => Some(r),
        Err(InvariantError::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let l = lower_bound(g.n(), omega, amin);
    Ok(ParamReport {
        n: g.n(),
        alpha: alpha(g),
        alpha_min: amin,
        alpha_min_witness: witness,
        omega,
        delta: g.max_degree(),
        dc: dc.as_ref().map(|d| d.count),
        dc_set: dc.map(|d| d.set),
        lower_bound: l,
        window: [l, l + 1],
        hs_upper: g.max_degree() + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn bg(n: usize, edges: &[(usize, usize)]) -> BlockGraph {
        BlockGraph::from_edge_list(n, edges).unwrap()
    }

    fn two_triangles() -> BlockGraph {
        bg(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&BlockGraph::new(Graph::complete(5)).unwrap()), 1);
        assert_eq!(alpha(&BlockGraph::new(Graph::path(4)).unwrap()), 2);
        assert_eq!(alpha(&two_triangles()), 2);
        assert_eq!(alpha(&BlockGraph::new(Graph::empty(0)).unwrap()), 0);
    }

    #[test]
    fn alpha_with_examples() {
        let p3 = BlockGraph::new(Graph::path(3)).unwrap();
        assert_eq!(alpha_with(&p3, 1).unwrap(), 1);
        assert_eq!(alpha_with(&p3, 0).unwrap(), 2);
        let tp = bg(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        // N[2] is the whole graph.
        assert_eq!(alpha_with(&tp, 2).unwrap(), 1);
        assert_eq!(alpha_with(&tp, 3).unwrap(), 2);
        assert!(matches!(
            alpha_with(&p3, 9),
            Err(InvariantError::Graph(GraphError::UnknownVertex(9)))
        ));
    }

    #[test]
    fn alpha_min_examples() {
        assert_eq!(alpha_min(&two_triangles()).unwrap(), (1, 0));
        assert_eq!(alpha_min(&families::clique_with_pendants(2)).unwrap().0, 4);
        assert_eq!(alpha_min(&BlockGraph::new(Graph::path(4)).unwrap()).unwrap(), (2, 0));
        assert_eq!(
            alpha_min(&BlockGraph::new(Graph::empty(0)).unwrap()),
            Err(InvariantError::EmptyGraph)
        );
    }

    #[test]
    fn dc_examples() {
        let k5 = BlockGraph::new(Graph::complete(5)).unwrap();
        assert_eq!(dc_exact(&k5, DEFAULT_DC_CAP).unwrap(), DcResult { count: 0, set: vec![] });
        let p4 = BlockGraph::new(Graph::path(4)).unwrap();
        assert_eq!(dc_exact(&p4, DEFAULT_DC_CAP).unwrap(), DcResult { count: 1, set: vec![1] });
        assert_eq!(
            dc_exact(&two_triangles(), DEFAULT_DC_CAP).unwrap(),
            DcResult { count: 1, set: vec![0] }
        );
        assert_eq!(
            dc_exact(&p4, 3),
            Err(InvariantError::TooLarge { n: 4, cap: 3 })
        );
    }

    #[test]
    fn ais_examples() {
        let k1 = BlockGraph::new(Graph::empty(1)).unwrap();
        assert!(is_ais(&k1, 0).unwrap());
        let k3 = BlockGraph::new(Graph::complete(3)).unwrap();
        assert!(!is_ais(&k3, 0).unwrap());
        let p5 = BlockGraph::new(Graph::path(5)).unwrap();
        // The unique maximum independent set of P5 is {0, 2, 4}.
        assert!(is_ais(&p5, 2).unwrap());
        assert!(is_ais(&p5, 0).unwrap());
        assert!(!is_ais(&p5, 1).unwrap());
    }

    #[test]
    fn v_ais_examples() {
        let p5 = BlockGraph::new(Graph::path(5)).unwrap();
        assert!(is_v_ais(&p5, 0, 4).unwrap());
        let p3 = BlockGraph::new(Graph::path(3)).unwrap();
        assert!(is_v_ais(&p3, 0, 2).unwrap());
        // K3 on {0,1,2} with pendant vertex 3 at 0.
        let g = bg(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(!is_v_ais(&g, 3, 1).unwrap());
        assert_eq!(
            is_v_ais(&g, 3, 0),
            Err(InvariantError::WIsInClosedNeighborhood { v: 3, w: 0 })
        );
    }

    #[test]
    fn bounds_report_examples() {
        let r = bounds_report(&families::clique_with_pendants(2)).unwrap();
        assert_eq!((r.n, r.omega, r.alpha_min, r.lower_bound), (14, 3, 4, 3));
        assert_eq!(r.window, [3, 4]);

        let k4 = bounds_report(&BlockGraph::new(Graph::complete(4)).unwrap()).unwrap();
        assert_eq!(k4.lower_bound, 4);
        assert_eq!(k4.dc, Some(0));
    }

    #[test]
    fn lower_bound_uses_ceiling() {
        assert_eq!(lower_bound(68, 4, 17), 4);
        assert_eq!(lower_bound(14, 3, 4), 3);
        assert_eq!(lower_bound(39, 4, 9), 4);
        assert_eq!(lower_bound(10, 2, 1), 6);
    }
}
