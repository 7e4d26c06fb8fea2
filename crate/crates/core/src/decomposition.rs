//! Blocks, cut vertices, the block-cut forest and clique levels.

use serde::Serialize;

use crate::graph::{BlockGraph, Graph, GraphError};

/// Vertex sets of the biconnected components with at least two vertices,
/// each sorted, in lexicographic order. Isolated vertices are omitted.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edges: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State<'_>, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.g.neighbors(u).len() {
            let w = s.g.neighbors(u)[i];
            if s.disc[w] == 0 {
                s.edges.push((u, w));
                visit(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = s.edges.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.edges.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }

    let mut s = State {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edges: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if s.disc[v] == 0 {
            visit(&mut s, v, usize::MAX);
        }
    }
    let mut out = s.out;
    out.sort();
    out
}

/// Blocks and cut vertices of a block graph.
///
/// Isolated vertices form singleton blocks. Blocks are sorted vertex sets in
/// lexicographic order; `tree_edges` are the (block index, cut vertex)
/// incidences of the block-cut forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub tree_edges: Vec<(usize, usize)>,
    #[serde(skip)]
    blocks_of: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.blocks_of[v]
    }

    pub fn is_cut(&self, v: usize) -> bool {
        self.blocks_of[v].len() >= 2
    }

    /// In a block graph a vertex is simplicial iff it is not a cut vertex.
    pub fn is_simplicial(&self, v: usize) -> bool {
        !self.is_cut(v)
    }

    pub fn cut_vertices_of(&self, block: usize) -> Vec<usize> {
        self.blocks[block]
            .iter()
            .copied()
            .filter(|&v| self.is_cut(v))
            .collect()
    }

    pub fn simplicial_vertices_of(&self, block: usize) -> Vec<usize> {
        self.blocks[block]
            .iter()
            .copied()
            .filter(|&v| !self.is_cut(v))
            .collect()
    }

    /// Blocks with exactly one cut vertex.
    pub fn pendant_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.cut_vertices_of(b).len() == 1)
            .collect()
    }

    /// Block containing both `u` and `w`, if they are adjacent.
    pub fn block_with(&self, u: usize, w: usize) -> Option<usize> {
        self.blocks_of[u]
            .iter()
            .copied()
            .find(|b| self.blocks_of[w].contains(b))
    }

    pub fn omega(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn decompose(g: &BlockGraph) -> BlockDecomposition {
    decompose_graph(g.graph())
}

pub(crate) fn decompose_graph(g: &Graph) -> BlockDecomposition {
    let mut blocks = biconnected_components(g);
    blocks.extend((0..g.n()).filter(|&v| g.degree(v) == 0).map(|v| vec![v]));
    blocks.sort();
    let mut blocks_of = vec![Vec::new(); g.n()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            blocks_of[v].push(b);
        }
    }
    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| blocks_of[v].len() >= 2).collect();
    let mut tree_edges: Vec<(usize, usize)> = cut_vertices
        .iter()
        .flat_map(|&c| blocks_of[c].iter().map(move |&b| (b, c)))
        .collect();
    tree_edges.sort_unstable();
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree_edges,
        blocks_of,
    }
}

/// Result of the clique-level peeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelAssignment {
    /// Level of each block, indexed like [`BlockDecomposition::blocks`].
    pub level: Vec<usize>,
    /// The vertex left over when peeling ends in a singleton.
    pub unleveled_singleton: Option<usize>,
    /// The vertex through which a block hangs off the rest of the residual
    /// graph in its round. `None` when the block was the whole residual graph.
    pub root: Vec<Option<usize>>,
    pub rounds: usize,
}

impl LevelAssignment {
    pub fn max_level(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }
}

/// Peels pendant cliques round by round: pendant cliques of the current
/// residual graph get the current level and their simplicial vertices are
/// removed. A residual consisting of one block takes the next level as a
/// whole; a residual singleton stays unleveled.
pub fn clique_levels(g: &BlockGraph) -> Result<LevelAssignment, GraphError> {
    levels_with(g.graph(), &decompose(g))
}

pub(crate) fn levels_with(
    g: &Graph,
    dec: &BlockDecomposition,
) -> Result<LevelAssignment, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::Edgeless);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let nb = dec.blocks.len();
    let mut level = vec![0; nb];
    let mut root = vec![None; nb];
    let mut alive = vec![true; g.n()];
    let mut unleveled_singleton = None;
    let mut round = 0;
    loop {
        let (residual, map) = g.induced_by_mask(&alive);
        if residual.n() == 0 {
            break;
        }
        if residual.n() == 1 {
            unleveled_singleton = Some(map[0]);
            break;
        }
        round += 1;
        let rdec = decompose_graph(&residual);
        let lone = rdec.blocks.len() == 1;
        for rb in 0..rdec.blocks.len() {
            let cuts = rdec.cut_vertices_of(rb);
            if !lone && cuts.len() != 1 {
                continue;
            }
            let members = &rdec.blocks[rb];
            let gb = dec
                .block_with(map[members[0]], map[members[1]])
                .expect("residual block lies inside a block of the graph");
            level[gb] = round;
            root[gb] = cuts.first().map(|&c| map[c]);
            for &v in members {
                if lone || !rdec.is_cut(v) {
                    alive[map[v]] = false;
                }
            }
        }
    }
    debug_assert!(level.iter().all(|&l| l > 0));
    Ok(LevelAssignment {
        level,
        unleveled_singleton,
        root,
        rounds: round,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueStarStatus {
    pub is_star: bool,
    /// Set when the graph has fewer than two blocks.
    pub single_clique: bool,
}

/// A connected block graph with at least two blocks is a star of cliques
/// when one vertex lies in every block.
pub fn is_clique_star(g: &BlockGraph) -> Result<CliqueStarStatus, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let dec = decompose(g);
    if dec.blocks.len() < 2 {
        return Ok(CliqueStarStatus {
            is_star: false,
            single_clique: true,
        });
    }
    let is_star = (0..g.n()).any(|v| dec.blocks_of(v).len() == dec.blocks.len());
    Ok(CliqueStarStatus {
        is_star,
        single_clique: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg(n: usize, edges: &[(usize, usize)]) -> BlockGraph {
        BlockGraph::from_edge_list(n, edges).unwrap()
    }

    fn two_triangles() -> BlockGraph {
        bg(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    }

    #[test]
    fn k3_has_one_block() {
        let d = decompose(&BlockGraph::new(Graph::complete(3)).unwrap());
        assert_eq!(d.blocks, vec![vec![0, 1, 2]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn p4_blocks_and_cuts() {
        let d = decompose(&BlockGraph::new(Graph::path(4)).unwrap());
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.tree_edges, vec![(0, 1), (1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn triangle_plus_pendant_cut_vertex() {
        let d = decompose(&bg(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]));
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![2]);
    }

    #[test]
    fn star_of_triangles_levels() {
        let lv = clique_levels(&two_triangles()).unwrap();
        assert_eq!(lv.level, vec![1, 1]);
        assert_eq!(lv.unleveled_singleton, Some(0));
        assert_eq!(lv.root, vec![Some(0), Some(0)]);
    }

    #[test]
    fn p5_levels() {
        let g = BlockGraph::new(Graph::path(5)).unwrap();
        let d = decompose(&g);
        let lv = clique_levels(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(lv.level, vec![1, 2, 2, 1]);
        assert_eq!(lv.unleveled_singleton, Some(2));
    }

    #[test]
    fn k2_levels() {
        let lv = clique_levels(&BlockGraph::new(Graph::complete(2)).unwrap()).unwrap();
        assert_eq!(lv.level, vec![1]);
        assert_eq!(lv.unleveled_singleton, None);
        assert_eq!(lv.root, vec![None]);
    }

    #[test]
    fn p4_middle_block_is_level_two_without_root() {
        let lv = clique_levels(&BlockGraph::new(Graph::path(4)).unwrap()).unwrap();
        assert_eq!(lv.level, vec![1, 2, 1]);
        assert_eq!(lv.root[1], None);
        assert_eq!(lv.unleveled_singleton, None);
    }

    #[test]
    fn levels_reject_bad_input() {
        let two_edges = bg(4, &[(0, 1), (2, 3)]);
        assert_eq!(clique_levels(&two_edges), Err(GraphError::Disconnected));
        let k1 = BlockGraph::new(Graph::empty(1)).unwrap();
        assert_eq!(clique_levels(&k1), Err(GraphError::Edgeless));
    }

    #[test]
    fn clique_star_examples() {
        assert_eq!(
            is_clique_star(&two_triangles()).unwrap(),
            CliqueStarStatus { is_star: true, single_clique: false }
        );
        let p4 = BlockGraph::new(Graph::path(4)).unwrap();
        assert!(!is_clique_star(&p4).unwrap().is_star);
        let k4 = BlockGraph::new(Graph::complete(4)).unwrap();
        assert_eq!(
            is_clique_star(&k4).unwrap(),
            CliqueStarStatus { is_star: false, single_clique: true }
        );
    }
}
