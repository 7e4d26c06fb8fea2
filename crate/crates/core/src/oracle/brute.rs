//! Exhaustive independence and cluster-deletion oracles on bitmasks.
//!
//! These deliberately avoid any block-graph structure so they can serve as
//! ground truth for the fast paths in [`crate::invariants`].

use crate::graph::Graph;

use super::OracleError;

pub const DEFAULT_BRUTE_CAP: usize = 20;

fn masks(g: &Graph, cap: usize) -> Result<Vec<u64>, OracleError> {
    let n = g.n();
    if n > cap.min(64) {
        return Err(OracleError::TooLarge { n, cap: cap.min(64) });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

/// Calls `visit` once for every independent set (as a bitmask), including
/// the empty set.
fn for_each_independent_set(adj: &[u64], mut visit: impl FnMut(u64)) {
    fn go(adj: &[u64], i: usize, set: u64, blocked: u64, visit: &mut impl FnMut(u64)) {
        if i == adj.len() {
            visit(set);
            return;
        }
        go(adj, i + 1, set, blocked, visit);
        if blocked & (1 << i) == 0 {
            go(adj, i + 1, set | 1 << i, blocked | adj[i], visit);
        }
    }
    go(adj, 0, 0, 0, &mut visit);
}

pub fn brute_alpha(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    let adj = masks(g, cap)?;
    let mut best = 0;
    for_each_independent_set(&adj, |s| best = best.max(s.count_ones() as usize));
    Ok(best)
}

/// α(G, v) for every vertex `v`, in one enumeration.
pub fn brute_alpha_with_all(g: &Graph, cap: usize) -> Result<Vec<usize>, OracleError> {
    let adj = masks(g, cap)?;
    let mut best = vec![0; g.n()];
    for_each_independent_set(&adj, |s| {
        let size = s.count_ones() as usize;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            best[v] = best[v].max(size);
            rest &= rest - 1;
        }
    });
    Ok(best)
}

pub fn brute_alpha_with(g: &Graph, v: usize, cap: usize) -> Result<usize, OracleError> {
    g.check_vertex(v)?;
    Ok(brute_alpha_with_all(g, cap)?[v])
}

pub fn brute_alpha_min(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    brute_alpha_with_all(g, cap)?
        .into_iter()
        .min()
        .ok_or(OracleError::EmptyGraph)
}

/// Every maximum independent set, as sorted vertex lists.
pub fn maximum_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let adj = masks(g, cap)?;
    let mut best = 0;
    let mut sets = Vec::new();
    for_each_independent_set(&adj, |s| {
        let size = s.count_ones();
        if size > best {
            best = size;
            sets.clear();
        }
        if size == best {
            sets.push(s);
        }
    });
    Ok(sets
        .into_iter()
        .map(|s| (0..g.n()).filter(|&v| s & (1 << v) != 0).collect())
        .collect())
}

/// AIS by definition: intersect all maximum independent sets.
pub fn brute_is_ais(g: &Graph, w: usize, cap: usize) -> Result<bool, OracleError> {
    g.check_vertex(w)?;
    Ok(maximum_independent_sets(g, cap)?
        .iter()
        .all(|s| s.contains(&w)))
}

/// Distance to cluster by scanning every kept vertex set for the largest
/// one inducing a P3-free graph.
pub fn brute_dc(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    let adj = masks(g, cap)?;
    let n = g.n();
    let mut best_kept = 0;
    for kept in 0u64..(1u64 << n) {
        let size = kept.count_ones() as usize;
        if size <= best_kept {
            continue;
        }
        // P3-free: adjacent vertices have identical closed neighbourhoods.
        let p3_free = (0..n).filter(|&v| kept & (1 << v) != 0).all(|v| {
            let nv = (adj[v] & kept) | 1 << v;
            let mut rest = adj[v] & kept;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                if (adj[w] & kept) | 1 << w != nv {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        });
        if p3_free {
            best_kept = size;
        }
    }
    Ok(n - best_kept)
}
