//! Backward search for a growth certificate of a given graph.
//!
//! States are vertex subsets `M ⊇ N[v]`. A predecessor of `G[M]` removes
//! one or two attached cliques: a pendant block minus its cut vertex, or a
//! fresh `K_2` end together with the pendant block hung off it. A removal
//! is kept only when replaying the forward operation on the smaller graph
//! reproduces `G[M]` exactly and conditions (B) and (C) hold.

use std::collections::HashSet;

use crate::decomposition::decompose_graph;
use crate::graph::{BlockGraph, Graph, GraphDoc};
use crate::invariants::{alpha_min_graph, alpha_with_graph};

use super::ops::apply_graph;
use super::{Attachment, CharCertificate, CharError, OpDescriptor, OpKind, StarExtension};

/// A certificate plus the labelling it induces: `vertex_map[i]` is the
/// vertex of the input graph that replay id `i` stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub certificate: CharCertificate,
    pub vertex_map: Vec<usize>,
}

/// Tries every cut vertex attaining `α_min` as the base vertex.
pub fn find_decomposition(g: &BlockGraph) -> Result<Option<Decomposition>, CharError> {
    if !g.is_connected() {
        return Err(CharError::Disconnected);
    }
    let dec = decompose_graph(g);
    if dec.cut_vertices.is_empty() {
        return Err(CharError::NoCutVertex);
    }
    let (amin, _) = alpha_min_graph(g)?;
    let witnesses: Vec<usize> = dec
        .cut_vertices
        .iter()
        .copied()
        .filter(|&v| alpha_with_graph(g, v) == amin)
        .collect();
    if witnesses.is_empty() {
        return Err(CharError::NoCutVertexWitness);
    }
    for v in witnesses {
        if let Some(d) = find_decomposition_at(g, v)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Searches for a certificate with base vertex `v`.
pub fn find_decomposition_at(g: &BlockGraph, v: usize) -> Result<Option<Decomposition>, CharError> {
    g.check_vertex(v)?;
    if g.n() > 64 {
        return Err(CharError::BadParameters(format!("{} vertices exceed the search limit of 64", g.n())));
    }
    let (amin, _) = alpha_min_graph(g)?;
    if alpha_with_graph(g, v) != amin || !decompose_graph(g).is_cut(v) {
        return Ok(None);
    }
    let base_mask = g.closed_neighborhood(v).iter().fold(0u64, |m, &u| m | 1 << u);
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut search = Search {
        g,
        v,
        base_mask,
        failed: HashSet::new(),
    };
    let Some(steps) = search.run(full, amin)? else {
        return Ok(None);
    };
    Ok(Some(build_certificate(g, v, base_mask, &steps)))
}

/// One forward step in original vertex ids.
#[derive(Debug, Clone)]
struct Step {
    kind: OpKind,
    /// Anchor and the fresh vertices of each attached clique.
    attachments: Vec<(usize, Vec<usize>)>,
    extension: Option<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone)]
struct Unit {
    anchor: usize,
    clique: Vec<usize>,
    extension: Option<Vec<usize>>,
}

impl Unit {
    fn mask(&self) -> u64 {
        self.clique
            .iter()
            .chain(self.extension.iter().flatten())
            .fold(0u64, |m, &u| m | 1 << u)
    }
}

struct Search<'a> {
    g: &'a Graph,
    v: usize,
    base_mask: u64,
    failed: HashSet<u64>,
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

impl Search<'_> {
    fn units(&self, mask: u64) -> Vec<Unit> {
        let verts = members(mask);
        let (sub, map) = self.g.induced(&verts);
        let dec = decompose_graph(&sub);
        let mut out = Vec::new();
        for b in dec.pendant_blocks() {
            let x = dec.cut_vertices_of(b)[0];
            let rest: Vec<usize> = dec.blocks[b].iter().copied().filter(|&u| u != x).map(|u| map[u]).collect();
            if rest.iter().any(|&u| self.base_mask & (1 << u) != 0) {
                continue;
            }
            out.push(Unit {
                anchor: map[x],
                clique: rest.clone(),
                extension: None,
            });
            // `x` as the fresh end of a K_2 whose other end anchors it.
            if let [b1, b2] = dec.blocks_of(x) {
                let k2 = if *b1 == b { *b2 } else { *b1 };
                if dec.blocks[k2].len() == 2 && self.base_mask & (1 << map[x]) == 0 {
                    let w1 = dec.blocks[k2].iter().copied().find(|&u| u != x).expect("K_2 has two ends");
                    out.push(Unit {
                        anchor: map[w1],
                        clique: vec![map[x]],
                        extension: Some(rest),
                    });
                }
            }
        }
        out
    }

    /// Steps from `G[N[v]]` up to `G[mask]`, in forward order.
    fn run(&mut self, mask: u64, amin: usize) -> Result<Option<Vec<Step>>, CharError> {
        if mask == self.base_mask {
            return Ok((amin == 1).then(Vec::new));
        }
        if amin <= 1 || self.failed.contains(&mask) {
            return Ok(None);
        }
        let units = self.units(mask);
        let mut combos: Vec<Vec<&Unit>> = units.iter().map(|u| vec![u]).collect();
        for (i, a) in units.iter().enumerate() {
            for b in &units[i + 1..] {
                let extensions = usize::from(a.extension.is_some()) + usize::from(b.extension.is_some());
                if a.anchor != b.anchor && a.mask() & b.mask() == 0 && extensions <= 1 {
                    let (first, second) = if a.anchor < b.anchor { (a, b) } else { (b, a) };
                    combos.push(vec![first, second]);
                }
            }
        }
        for combo in combos {
            let removed = combo.iter().fold(0u64, |m, u| m | u.mask());
            let smaller = mask & !removed;
            if smaller & self.base_mask != self.base_mask {
                continue;
            }
            if let Some(step) = self.try_reverse(mask, smaller, &combo, amin)? {
                if let Some(mut steps) = self.run(smaller, amin - 1)? {
                    steps.push(step);
                    return Ok(Some(steps));
                }
            }
        }
        self.failed.insert(mask);
        Ok(None)
    }

    /// The forward step from `G[smaller]` to `G[mask]` adding `combo`, if
    /// some operation produces it and (B), (C) hold for `G[smaller]`.
    fn try_reverse(&self, mask: u64, smaller: u64, combo: &[&Unit], amin: usize) -> Result<Option<Step>, CharError> {
        let keep = members(smaller);
        let (sub, _) = self.g.induced(&keep);
        let local = |u: usize| keep.binary_search(&u).expect("anchor survives the removal");
        let v = local(self.v);
        let (sub_amin, _) = alpha_min_graph(&sub)?;
        if sub_amin + 1 != amin || alpha_with_graph(&sub, v) != sub_amin {
            return Ok(None);
        }
        let mut order = keep.clone();
        for u in combo {
            order.extend(&u.clique);
        }
        let mut star_extension = None;
        for (i, u) in combo.iter().enumerate() {
            if let Some(ext) = &u.extension {
                order.extend(ext);
                star_extension = Some(StarExtension {
                    attachment: i,
                    size: ext.len() + 1,
                });
            }
        }
        debug_assert_eq!(order.len(), members(mask).len());
        let (expected, _) = self.g.induced(&order);
        let attachments: Vec<Attachment> = combo
            .iter()
            .map(|u| Attachment {
                anchor: local(u.anchor),
                size: u.clique.len() + 1,
            })
            .collect();
        let kinds: &[OpKind] = if combo.len() == 2 { &[OpKind::TwinAttach] } else { &OpKind::ALL };
        for &kind in kinds {
            let op = OpDescriptor {
                kind,
                attachments: attachments.clone(),
                star_extension,
            };
            if apply_graph(&sub, v, &op).is_ok_and(|h| h == expected) {
                return Ok(Some(Step {
                    kind,
                    attachments: combo.iter().map(|u| (u.anchor, u.clique.clone())).collect(),
                    extension: combo
                        .iter()
                        .enumerate()
                        .find_map(|(i, u)| u.extension.clone().map(|e| (i, e))),
                }));
            }
        }
        Ok(None)
    }
}

fn build_certificate(g: &Graph, v: usize, base_mask: u64, steps: &[Step]) -> Decomposition {
    let mut vertex_map = members(base_mask);
    let (base, _) = g.induced(&vertex_map);
    let mut replay_id = vec![usize::MAX; g.n()];
    for (i, &u) in vertex_map.iter().enumerate() {
        replay_id[u] = i;
    }
    let base_vertex = replay_id[v];
    let mut ops = Vec::with_capacity(steps.len());
    for step in steps {
        let attachments = step
            .attachments
            .iter()
            .map(|(anchor, clique)| Attachment {
                anchor: replay_id[*anchor],
                size: clique.len() + 1,
            })
            .collect();
        let fresh = step
            .attachments
            .iter()
            .flat_map(|(_, c)| c)
            .chain(step.extension.iter().flat_map(|(_, e)| e));
        for &u in fresh {
            replay_id[u] = vertex_map.len();
            vertex_map.push(u);
        }
        ops.push(OpDescriptor {
            kind: step.kind,
            attachments,
            star_extension: step.extension.as_ref().map(|(i, e)| StarExtension {
                attachment: *i,
                size: e.len() + 1,
            }),
        });
    }
    Decomposition {
        certificate: CharCertificate {
            base_vertex,
            base_graph: GraphDoc::from(&base),
            steps: ops,
        },
        vertex_map,
    }
}
