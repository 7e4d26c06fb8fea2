//! Connected block graphs up to isomorphism.
//!
//! The generator grows graphs by attaching a clique of size ≥ 2 at a vertex,
//! which reaches every connected block graph (remove a pendant block to go
//! back). The filter oracle instead scans every labelled graph and tests the
//! block-graph property through a different characterisation (chordal and
//! diamond-free), so the two share no structural code.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{BlockGraph, Graph};

use super::canon::canonical_form;
use super::OracleError;

/// Largest `n_max` accepted by [`enumerate_block_graphs`].
pub const ENUMERATION_CAP: usize = 12;

/// Largest `n` accepted by [`filter_count_block_graphs`].
pub const FILTER_CAP: usize = 6;

/// One representative per isomorphism class of connected block graphs on
/// `1..=n_max` vertices, ordered by vertex count then canonical bytes.
pub fn enumerate_block_graphs(n_max: usize) -> Result<Vec<BlockGraph>, OracleError> {
    if n_max > ENUMERATION_CAP {
        return Err(OracleError::TooLarge {
            n: n_max,
            cap: ENUMERATION_CAP,
        });
    }
    let mut by_size: Vec<BTreeMap<Vec<u8>, Graph>> = vec![BTreeMap::new(); n_max + 1];
    if n_max >= 1 {
        let k1 = Graph::empty(1);
        by_size[1].insert(canonical_form(&k1)?.bytes, k1);
    }
    for m in 1..n_max {
        let current = std::mem::take(&mut by_size[m]);
        for g in current.values() {
            for anchor in 0..m {
                for size in 2..=n_max - m + 1 {
                    let mut h = g.clone();
                    h.attach_clique(anchor, size);
                    let key = canonical_form(&h)?.bytes;
                    by_size[h.n()].entry(key).or_insert(h);
                }
            }
        }
        by_size[m] = current;
    }
    Ok(by_size
        .into_iter()
        .flat_map(|level| level.into_values())
        .map(BlockGraph::trusted)
        .collect())
}

/// Counts of the enumeration per vertex count, index `n` for `n` vertices.
pub fn counts_by_size(graphs: &[BlockGraph], n_max: usize) -> Vec<usize> {
    let mut counts = vec![0; n_max + 1];
    for g in graphs {
        counts[g.n()] += 1;
    }
    counts
}

/// Number of isomorphism classes of connected block graphs on exactly `n`
/// vertices, by filtering all `2^(n choose 2)` labelled graphs.
pub fn filter_count_block_graphs(n: usize) -> Result<usize, OracleError> {
    if n > FILTER_CAP {
        return Err(OracleError::TooLarge { n, cap: FILTER_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for code in 0u32..(1u32 << pairs.len()) {
        let mut adj = vec![0u32; n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if code & (1 << bit) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        if !connected(&adj) || !chordal(&adj) || has_diamond(&adj) {
            continue;
        }
        let min_code = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u32, |acc, (bit, &(i, j))| {
                    if adj[p[i]] & (1 << p[j]) != 0 {
                        acc | 1 << bit
                    } else {
                        acc
                    }
                })
            })
            .min()
            .expect("at least one permutation");
        classes.insert(min_code);
    }
    Ok(classes.len())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn connected(adj: &[u32]) -> bool {
    let all = (1u32 << adj.len()) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == all
}

/// Chordal iff repeatedly deleting simplicial vertices empties the graph.
fn chordal(adj: &[u32]) -> bool {
    let mut alive = (1u32 << adj.len()) - 1;
    'peel: while alive != 0 {
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nv = adj[v] & alive;
            let mut ns = nv;
            let mut clique = true;
            while ns != 0 {
                let w = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                if (nv & !(1 << w)) & !adj[w] != 0 {
                    clique = false;
                    break;
                }
            }
            if clique {
                alive &= !(1 << v);
                continue 'peel;
            }
        }
        return false;
    }
    true
}

/// A diamond is an edge whose endpoints have two non-adjacent common
/// neighbours.
fn has_diamond(adj: &[u32]) -> bool {
    let n = adj.len();
    (0..n).any(|u| {
        (u + 1..n).filter(|&v| adj[u] & (1 << v) != 0).any(|v| {
            let common = adj[u] & adj[v];
            let mut rest = common;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (common & !(1 << x)) & !adj[x] != 0 {
                    return true;
                }
            }
            false
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases() {
        assert_eq!(enumerate_block_graphs(2).unwrap().len(), 2);
        let three = enumerate_block_graphs(3).unwrap();
        assert_eq!(counts_by_size(&three, 3), vec![0, 1, 1, 2]);
    }

    #[test]
    fn filter_rejects_c4_and_diamond() {
        let c4 = [0b1010, 0b0101, 0b1010, 0b0101];
        assert!(!chordal(&c4));
        let diamond = [0b1110, 0b0101, 0b1011, 0b0101];
        assert!(chordal(&diamond));
        assert!(has_diamond(&diamond));
    }

    #[test]
    fn filter_small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| filter_count_block_graphs(n).unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4]);
    }
}
