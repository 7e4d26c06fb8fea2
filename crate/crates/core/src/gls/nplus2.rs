//! Equitable `(n+2)`-colouring of any GLS graph by local search.
//!
//! The search works on `H`, the GLS graph with `y_0..y_n` joined into a
//! clique, whose blocks are that clique and one block per petal (the petal
//! plus its flower's universal vertex). Only petal vertices are recoloured.
//! Every accepted step moves one vertex from a class `x` to a class `y`
//! with `|V_x| ≥ |V_y| + 2`, so the product of class sizes strictly grows.

use log::debug;
use serde::Serialize;

use crate::coloring::Coloring;

use super::{GlsError, GlsGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NPlus2Stats {
    pub initial_sizes: Vec<usize>,
    pub final_sizes: Vec<usize>,
    pub improving_moves: usize,
    pub transfer_moves: usize,
    pub sideways_moves: usize,
    /// Largest minus smallest class at the fixpoint.
    pub spread: usize,
}

pub fn color_nplus2(g: &GlsGraph) -> Result<Coloring, GlsError> {
    color_nplus2_with_stats(g).map(|(c, _)| c)
}

#[derive(Clone, Copy)]
enum Move {
    Recolor { u: usize, to: usize },
    Transfer { u: usize, to: usize, w: usize, w_to: usize },
}

struct State {
    t: usize,
    colors: Vec<usize>,
    size: Vec<usize>,
    /// Petal blocks of `H`, each listing its simplicial vertices.
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    count: Vec<Vec<usize>>,
}

impl State {
    fn missing(&self, b: usize, c: usize) -> bool {
        self.count[b][c] == 0
    }

    fn recolor(&mut self, u: usize, to: usize) {
        let b = self.block_of[u];
        let from = self.colors[u];
        self.count[b][from] -= 1;
        self.count[b][to] += 1;
        self.size[from] -= 1;
        self.size[to] += 1;
        self.colors[u] = to;
    }

    fn apply(&mut self, m: Move) {
        match m {
            Move::Recolor { u, to } => self.recolor(u, to),
            Move::Transfer { u, to, w, w_to } => {
                self.recolor(u, to);
                self.recolor(w, w_to);
            }
        }
    }

    fn simplicial(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().flatten().copied()
    }

    /// A simplicial vertex of the largest possible class moved into a
    /// colour missing from its block that is at least two smaller.
    fn improving_recolor(&self) -> Option<Move> {
        let mut best: Option<(usize, Move)> = None;
        for u in self.simplicial() {
            let x = self.colors[u];
            let b = self.block_of[u];
            for z in 0..self.t {
                if self.missing(b, z) && self.size[x] >= self.size[z] + 2 {
                    let gain = self.size[x] - self.size[z];
                    if best.is_none_or(|(g, _)| gain > g) {
                        best = Some((gain, Move::Recolor { u, to: z }));
                    }
                }
            }
        }
        best.map(|(_, m)| m)
    }

    /// Moves a unit from class `x` to class `y` through a third colour `c`:
    /// `u` (colour `x`, block `Q1`) takes `c` missing from `Q1`, and a
    /// vertex `w` of colour `c` in a block `Q2` missing `y` takes `y`.
    fn transfer(&self) -> Option<Move> {
        let mut by_size: Vec<usize> = (0..self.t).collect();
        by_size.sort_by_key(|&c| (std::cmp::Reverse(self.size[c]), c));
        for &x in &by_size {
            for &y in by_size.iter().rev() {
                if self.size[x] < self.size[y] + 2 {
                    continue;
                }
                for u in self.simplicial().filter(|&u| self.colors[u] == x) {
                    let q1 = self.block_of[u];
                    for (q2, members) in self.blocks.iter().enumerate() {
                        if q2 == q1 || !self.missing(q2, y) {
                            continue;
                        }
                        for &w in members {
                            let c = self.colors[w];
                            if c != x && c != y && self.missing(q1, c) {
                                return Some(Move::Transfer { u, to: c, w, w_to: y });
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn improving(&self) -> Option<Move> {
        self.improving_recolor().or_else(|| self.transfer())
    }

    /// Product-neutral recolourings `x → z` with `|V_z| = |V_x| - 1`.
    fn sideways(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for u in self.simplicial() {
            let x = self.colors[u];
            let b = self.block_of[u];
            for z in 0..self.t {
                if self.missing(b, z) && self.size[z] + 1 == self.size[x] {
                    out.push(Move::Recolor { u, to: z });
                }
            }
        }
        out
    }

    fn spread(&self) -> usize {
        self.size.iter().max().unwrap_or(&0) - self.size.iter().min().unwrap_or(&0)
    }
}

pub fn color_nplus2_with_stats(g: &GlsGraph) -> Result<(Coloring, NPlus2Stats), GlsError> {
    let t = g.n_items() + 2;
    let graph = &g.graph;
    let n = graph.n();

    let mut blocks = Vec::new();
    let mut block_universal = Vec::new();
    let mut block_of = vec![usize::MAX; n];
    for (j, flower) in g.petals.iter().enumerate() {
        for petal in flower {
            for &v in petal {
                block_of[v] = blocks.len();
            }
            blocks.push(petal.clone());
            block_universal.push(g.universal[j]);
        }
    }

    // Greedy colouring of H by descending degree; universal vertices have
    // the largest degrees and receive pairwise distinct colours.
    let is_universal = |v: usize| g.universal.contains(&v);
    let h_neighbors = |v: usize| -> Vec<usize> {
        let mut ns = graph.neighbors(v).to_vec();
        if is_universal(v) {
            ns.extend(g.universal.iter().copied().filter(|&y| y != v));
        }
        ns
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h_neighbors(v).len()), v));
    let mut colors = vec![usize::MAX; n];
    for v in order {
        let used: Vec<usize> = h_neighbors(v).into_iter().map(|w| colors[w]).collect();
        colors[v] = (0..t).find(|c| !used.contains(c)).expect("n + 2 colours suffice for H");
    }

    let mut size = vec![0; t];
    for &c in &colors {
        size[c] += 1;
    }
    let mut count = vec![vec![0; t]; blocks.len()];
    for (b, members) in blocks.iter().enumerate() {
        count[b][colors[block_universal[b]]] += 1;
        for &v in members {
            count[b][colors[v]] += 1;
        }
    }
    let mut s = State {
        t,
        colors,
        size,
        blocks,
        block_of,
        count,
    };

    let initial_sizes = s.size.clone();
    let (mut improving_moves, mut transfer_moves, mut sideways_moves) = (0, 0, 0);
    'search: loop {
        if let Some(m) = s.improving() {
            match m {
                Move::Recolor { .. } => improving_moves += 1,
                Move::Transfer { .. } => transfer_moves += 1,
            }
            s.apply(m);
            continue;
        }
        // A neutral step is kept only when it unlocks an improving one.
        for m in s.sideways() {
            let Move::Recolor { u, .. } = m else { unreachable!() };
            let back = s.colors[u];
            s.apply(m);
            if let Some(next) = s.improving() {
                sideways_moves += 1;
                s.apply(next);
                continue 'search;
            }
            s.recolor(u, back);
        }
        break;
    }

    let spread = s.spread();
    debug!("fixpoint class sizes {:?}, spread {spread}", s.size);
    let stats = NPlus2Stats {
        initial_sizes,
        final_sizes: s.size.clone(),
        improving_moves,
        transfer_moves,
        sideways_moves,
        spread,
    };
    let coloring = Coloring::new(t, s.colors);
    if !coloring.is_proper(graph) || !coloring.is_equitable() {
        return Err(GlsError::NotEquitableAtFixpoint {
            sizes: stats.final_sizes,
            colors: coloring.colors,
        });
    }
    Ok((coloring, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gls::{build_gls, BinPackingInstance};

    fn run(items: &[usize], k: usize, b: usize) -> Vec<usize> {
        let g = build_gls(&BinPackingInstance::new(items.to_vec(), k, b).unwrap()).unwrap();
        let c = color_nplus2(&g).unwrap();
        assert!(c.is_proper(&g.graph) && c.is_equitable());
        let mut sizes = c.class_sizes();
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn spec_examples() {
        assert_eq!(run(&[3, 3, 3, 3], 3, 4), vec![11, 11, 11, 11, 12, 12]);
        assert_eq!(run(&[2, 2], 1, 4), vec![3, 3, 4, 4]);
        assert_eq!(run(&[1], 1, 1), vec![2, 2, 2]);
    }
}
