//! Simple undirected graphs and the validated [`BlockGraph`] wrapper.
//!
//! Vertices are dense ids `0..n`. Every graph-surgery operation returns a
//! fresh graph together with the map from new ids back to old ids, so
//! callers can replay constructions on the original labelling.

use std::collections::BTreeSet;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::biconnected_components;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {endpoint} out of range for a graph on {n} vertices")]
    VertexOutOfRange { endpoint: usize, n: usize },
    #[error("not a block graph: {0} and {1} lie in a common block but are not adjacent")]
    NotABlockGraph(usize, usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    /// Path `P_n` on vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::from_edges(n, edges).expect("path edges are in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Appends a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for endpoint in [u, v] {
            if endpoint >= n {
                return Err(GraphError::VertexOutOfRange { endpoint, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    /// Adds a clique of `size` vertices that shares `anchor` with the graph,
    /// i.e. `size - 1` fresh vertices. Returns the fresh ids.
    pub fn attach_clique(&mut self, anchor: usize, size: usize) -> Vec<usize> {
        assert!(anchor < self.n(), "anchor {anchor} out of range");
        let fresh: Vec<usize> = (1..size).map(|_| self.add_vertex()).collect();
        let mut members = fresh.clone();
        members.push(anchor);
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                self.add_edge(a, b).expect("fresh clique edges are valid");
            }
        }
        fresh
    }

    /// Subgraph induced by `keep` (in the given order). Returns the graph and
    /// the map from new ids to old ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&old| {
                let mut ns: Vec<usize> = self.adj[old]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        (Graph { adj }, keep.to_vec())
    }

    /// Subgraph induced by the vertices flagged `true` in `alive`.
    pub fn induced_by_mask(&self, alive: &[bool]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| alive[v]).collect();
        self.induced(&keep)
    }

    /// Deletes a vertex set, re-densifying ids.
    pub fn without(&self, removed: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn closed_neighborhood(&self, v: usize) -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = self.adj[v].iter().copied().collect();
        s.insert(v);
        s
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the given vertices are pairwise adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Whether every connected component is complete.
    pub fn is_cluster(&self) -> bool {
        self.components().iter().all(|c| {
            c.iter().all(|&v| self.degree(v) == c.len() - 1)
        })
    }

    /// BFS distances from `s` (`usize::MAX` for unreachable vertices).
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph.
    pub fn diameter(&self) -> usize {
        (0..self.n())
            .flat_map(|s| self.distances_from(s))
            .filter(|&d| d != usize::MAX)
            .max()
            .unwrap_or(0)
    }

    /// Disjoint union, second graph shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, ns) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = ns.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph { adj }
    }
}

/// A simple graph in which every block (maximal 2-connected subgraph) is a
/// clique. Validated on construction; immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockGraph {
    graph: Graph,
    labels: Option<Vec<String>>,
}

impl BlockGraph {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        validate_block_graph(&graph)?;
        Ok(BlockGraph { graph, labels: None })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        BlockGraph::new(Graph::from_edges(n, edges.iter().copied())?)
    }

    /// Wraps a graph already known to be a block graph (induced subgraphs of
    /// block graphs, clique attachments). Checked in debug builds.
    pub(crate) fn trusted(graph: Graph) -> Self {
        debug_assert!(validate_block_graph(&graph).is_ok());
        BlockGraph { graph, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.graph.n() {
            return Err(GraphError::LabelCount {
                expected: self.graph.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Deletes `removed`, returning the induced block graph and the map from
    /// new ids to old ids.
    pub fn delete_vertices(
        &self,
        removed: &BTreeSet<usize>,
    ) -> Result<(BlockGraph, Vec<usize>), GraphError> {
        if let Some(&v) = removed.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::UnknownVertex(v));
        }
        let (g, map) = self.graph.without(removed);
        let labels = self
            .labels
            .as_ref()
            .map(|ls| map.iter().map(|&old| ls[old].clone()).collect());
        Ok((BlockGraph { graph: g, labels }, map))
    }

    /// Deletes the closed neighbourhood `N[v]`.
    pub fn delete_closed_neighborhood(
        &self,
        v: usize,
    ) -> Result<(BlockGraph, Vec<usize>), GraphError> {
        self.check_vertex(v)?;
        self.delete_vertices(&self.closed_neighborhood(v))
    }

    /// Returns a copy with a clique of `size` vertices attached at `anchor`.
    pub fn with_clique_at(&self, anchor: usize, size: usize) -> Result<BlockGraph, GraphError> {
        self.check_vertex(anchor)?;
        let mut g = self.graph.clone();
        g.attach_clique(anchor, size);
        Ok(BlockGraph::trusted(g))
    }
}

impl Deref for BlockGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl TryFrom<Graph> for BlockGraph {
    type Error = GraphError;

    fn try_from(g: Graph) -> Result<Self, GraphError> {
        BlockGraph::new(g)
    }
}

/// Checks that every biconnected component is complete; on failure returns
/// a non-adjacent pair inside one block.
pub fn validate_block_graph(g: &Graph) -> Result<(), GraphError> {
    for block in biconnected_components(g) {
        for (i, &a) in block.iter().enumerate() {
            if let Some(&b) = block[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Err(GraphError::NotABlockGraph(a, b));
            }
        }
    }
    Ok(())
}

/// Serializable edge-list form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: None,
        }
    }
}

impl From<&BlockGraph> for GraphDoc {
    fn from(g: &BlockGraph) -> Self {
        GraphDoc {
            labels: g.labels().map(<[String]>::to_vec),
            ..GraphDoc::from(g.graph())
        }
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }

    pub fn to_block_graph(&self) -> Result<BlockGraph, GraphError> {
        let g = BlockGraph::new(self.to_graph()?)?;
        match &self.labels {
            Some(ls) => g.with_labels(ls.clone()),
            None => Ok(g),
        }
    }
}
