//! Exact equitable colourability and the equitable chromatic spectrum.
//!
//! Backtracking over vertices in degeneracy order. Class sizes are capped
//! at `⌈n/t⌉`, and a fixed partition of the vertices into cliques gives two
//! counting bounds per colour: colours forced into a clique (its uncoloured
//! members have exactly as many admissible colours as members) raise a lower
//! bound, and each clique can contribute at most one vertex of a colour,
//! which caps what a class can still reach.

use serde::Serialize;

use crate::coloring::Coloring;
use crate::graph::Graph;

use super::OracleError;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest colour count the search handles below `n` (domains are `u64`).
pub const MAX_SEARCH_COLORS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColoringCheck {
    pub proper: bool,
    pub equitable: bool,
}

pub fn check_coloring(g: &Graph, c: &Coloring) -> Result<ColoringCheck, OracleError> {
    if c.colors.len() < g.n() {
        return Err(OracleError::UncoloredVertex(c.colors.len()));
    }
    if c.colors.len() > g.n() {
        return Err(OracleError::Graph(crate::graph::GraphError::UnknownVertex(g.n())));
    }
    if let Some((vertex, &color)) = c.colors.iter().enumerate().find(|(_, &col)| col >= c.t) {
        return Err(OracleError::ColorOutOfRange {
            vertex,
            color,
            t: c.t,
        });
    }
    Ok(ColoringCheck {
        proper: c.is_proper(g),
        equitable: c.is_equitable(),
    })
}

/// Decides whether `g` has an equitable `t`-colouring and returns a witness.
pub fn exact_equitable_colorable(
    g: &Graph,
    t: usize,
    budget: u64,
) -> Result<Option<Coloring>, OracleError> {
    let n = g.n();
    if t == 0 {
        return Ok((n == 0).then(|| Coloring::new(0, Vec::new())));
    }
    if t >= n {
        return Ok(Some(Coloring::new(t, (0..n).collect())));
    }
    if t > MAX_SEARCH_COLORS {
        return Err(OracleError::TooManyColors {
            t,
            cap: MAX_SEARCH_COLORS,
        });
    }
    let mut s = EquitableSearch::new(g, t, budget);
    if s.dfs(0, 0)? {
        Ok(Some(Coloring::new(t, s.color)))
    } else {
        Ok(None)
    }
}

const NONE: usize = usize::MAX;

struct EquitableSearch<'a> {
    g: &'a Graph,
    t: usize,
    order: Vec<usize>,
    color: Vec<usize>,
    count: Vec<usize>,
    /// `nbr[v][c]`: coloured neighbours of `v` with colour `c`.
    nbr: Vec<Vec<u32>>,
    cliques: Vec<Vec<usize>>,
    lo: usize,
    hi: usize,
    num_hi: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> EquitableSearch<'a> {
    fn new(g: &'a Graph, t: usize, budget: u64) -> Self {
        let n = g.n();
        EquitableSearch {
            g,
            t,
            order: degeneracy_order(g),
            color: vec![NONE; n],
            count: vec![0; t],
            nbr: vec![vec![0; t]; n],
            cliques: clique_partition(g),
            lo: n / t,
            hi: n.div_ceil(t),
            num_hi: n % t,
            nodes: 0,
            budget,
        }
    }

    fn domain(&self, v: usize) -> u64 {
        (0..self.t)
            .filter(|&c| self.nbr[v][c] == 0)
            .fold(0u64, |m, c| m | 1 << c)
    }

    fn full_mask(&self) -> u64 {
        (0..self.t)
            .filter(|&c| self.count[c] >= self.hi)
            .fold(0u64, |m, c| m | 1 << c)
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.count[c] += 1;
        for &w in self.g.neighbors(v) {
            self.nbr[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        self.count[c] -= 1;
        for &w in self.g.neighbors(v) {
            self.nbr[w][c] -= 1;
        }
    }

    fn feasible_after(&self, v: usize) -> bool {
        if self
            .g
            .neighbors(v)
            .iter()
            .any(|&w| self.color[w] == NONE && self.domain(w) == 0)
        {
            return false;
        }
        let open = !self.full_mask();
        let mut forced = vec![0usize; self.t];
        let mut reach = vec![0usize; self.t];
        for q in &self.cliques {
            let mut uncolored = 0u32;
            let mut union = 0u64;
            for &w in q {
                if self.color[w] == NONE {
                    uncolored += 1;
                    union |= self.domain(w);
                }
            }
            if uncolored == 0 {
                continue;
            }
            union &= open;
            if union.count_ones() < uncolored {
                return false;
            }
            let tight = union.count_ones() == uncolored;
            for c in 0..self.t {
                if union & (1 << c) != 0 {
                    reach[c] += 1;
                    if tight {
                        forced[c] += 1;
                    }
                }
            }
        }
        let mut at_hi = 0;
        for c in 0..self.t {
            let least = self.count[c] + forced[c];
            if least > self.hi || self.count[c] + reach[c] < self.lo {
                return false;
            }
            if least == self.hi {
                at_hi += 1;
            }
        }
        self.num_hi == 0 || at_hi <= self.num_hi
    }

    fn dfs(&mut self, idx: usize, used: usize) -> Result<bool, OracleError> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let v = self.order[idx];
        let dom = self.domain(v) & !self.full_mask();
        // Colours beyond the first unused one are interchangeable.
        let limit = (used + 1).min(self.t);
        let mut candidates: Vec<usize> = (0..limit).filter(|&c| dom & (1 << c) != 0).collect();
        candidates.sort_by_key(|&c| (self.count[c], c));
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(OracleError::SearchBudgetExceeded { nodes: self.budget });
            }
            self.assign(v, c);
            if self.feasible_after(v) && self.dfs(idx + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Reverse smallest-last order: dense cores are coloured first.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], g.degree(v), v))
            .expect("a vertex remains");
        removed[v] = true;
        seq.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    seq.reverse();
    seq
}

/// Greedy partition of the vertex set into cliques, seeded from low-degree
/// vertices so that simplicial vertices pull in their whole block.
fn clique_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut covered = vec![false; n];
    let mut out = Vec::new();
    for v in by_degree {
        if covered[v] {
            continue;
        }
        covered[v] = true;
        let mut q = vec![v];
        for &w in g.neighbors(v) {
            if !covered[w] && q.iter().all(|&x| g.has_edge(x, w)) {
                covered[w] = true;
                q.push(w);
            }
        }
        out.push(q);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub t_cap: usize,
    pub feasible: Vec<usize>,
    pub infeasible: Vec<usize>,
    /// Colour counts where the search ran out of budget.
    pub unknown: Vec<usize>,
    pub chi_eq: Option<usize>,
    /// Smallest `t` such that every `t'` in `t..=t_cap` is feasible.
    pub chi_eq_star: Option<usize>,
    pub gap_free: Option<bool>,
    pub complete: bool,
}

pub fn spectrum(g: &Graph, t_cap: usize, budget: u64) -> Result<SpectrumReport, OracleError> {
    let n = g.n();
    if t_cap > n {
        return Err(OracleError::CapAboveVertexCount { cap: t_cap, n });
    }
    let mut feasible = Vec::new();
    let mut infeasible = Vec::new();
    let mut unknown = Vec::new();
    for t in 1..=t_cap {
        match exact_equitable_colorable(g, t, budget) {
            Ok(Some(_)) => feasible.push(t),
            Ok(None) => infeasible.push(t),
            Err(OracleError::SearchBudgetExceeded { .. }) => unknown.push(t),
            Err(e) => return Err(e),
        }
    }
    let first_unknown = unknown.first().copied().unwrap_or(usize::MAX);
    let chi_eq = feasible.first().copied().filter(|&t| t < first_unknown);
    let chi_eq_star = if unknown.is_empty() {
        let mut star = None;
        for t in (1..=t_cap).rev() {
            if feasible.contains(&t) {
                star = Some(t);
            } else {
                break;
            }
        }
        star
    } else {
        None
    };
    let gap_free = match (chi_eq, chi_eq_star) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(SpectrumReport {
        n,
        t_cap,
        complete: unknown.is_empty() && t_cap == n,
        feasible,
        infeasible,
        unknown,
        chi_eq,
        chi_eq_star,
        gap_free,
    })
}

/// Smallest feasible `t`, scanning upwards from 1.
pub fn equitable_chromatic_number(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    for t in 1..=g.n().max(1) {
        if exact_equitable_colorable(g, t, budget)?.is_some() {
            return Ok(t);
        }
    }
    Ok(g.n().max(1))
}
