use crate::decomposition::{decompose_graph, levels_with, BlockDecomposition, LevelAssignment};
use crate::graph::{BlockGraph, Graph};
use crate::invariants::v_ais_graph;

use super::{violated, CharError, OpDescriptor, OpKind};

/// Block structure of `G_i` as seen from the base vertex `v`.
pub(crate) struct Structure {
    pub dec: BlockDecomposition,
    pub levels: LevelAssignment,
    /// Root of every block. A block that formed the whole residual graph in
    /// its peeling round is rooted at its vertex closest to `v`.
    pub root: Vec<usize>,
}

impl Structure {
    pub fn new(g: &Graph, v: usize) -> Result<Self, CharError> {
        let dec = decompose_graph(g);
        let levels = levels_with(g, &dec)?;
        let dist = g.distances_from(v);
        let root = (0..dec.blocks.len())
            .map(|b| {
                levels.root[b].unwrap_or_else(|| {
                    *dec.blocks[b]
                        .iter()
                        .min_by_key(|&&u| (dist[u], u))
                        .expect("blocks are nonempty")
                })
            })
            .collect();
        Ok(Structure { dec, levels, root })
    }

    fn level(&self, b: usize) -> usize {
        self.levels.level[b]
    }

    /// The block of a simplicial vertex.
    fn home(&self, s: usize) -> Option<usize> {
        match self.dec.blocks_of(s) {
            [b] => Some(*b),
            _ => None,
        }
    }
}

fn check_op1(st: &Structure, v: usize, x: usize) -> Result<(), String> {
    if x == v {
        return Err("anchor is the base vertex".into());
    }
    if !st.dec.is_cut(x) {
        return Err(format!("anchor {x} is not a cut vertex"));
    }
    if !st
        .dec
        .blocks_of(x)
        .iter()
        .any(|&b| st.dec.cut_vertices_of(b).len() == 1)
    {
        return Err(format!("anchor {x} lies in no pendant clique"));
    }
    Ok(())
}

fn check_op2(g: &Graph, st: &Structure, v: usize, x: usize) -> Result<(), String> {
    if !st.dec.is_cut(x) {
        return Err(format!("anchor {x} is not a cut vertex"));
    }
    if v_ais_graph(g, v, x) {
        return Err(format!("anchor {x} is v-AIS"));
    }
    if !st
        .dec
        .blocks_of(x)
        .iter()
        .any(|&b| st.dec.blocks[b].len() == 2 && st.level(b) == 2)
    {
        return Err(format!("anchor {x} lies in no level-2 K_2"));
    }
    Ok(())
}

fn check_op3(st: &Structure, s: usize) -> Result<(), String> {
    let q = st.home(s).ok_or_else(|| format!("anchor {s} is not simplicial"))?;
    let simplicial = st.dec.simplicial_vertices_of(q).len();
    match st.level(q) {
        1 | 2 if simplicial >= 3 => Ok(()),
        3 => {
            let z = st.root[q];
            for &u in &st.dec.blocks[q] {
                for &b in st.dec.blocks_of(u) {
                    if b != q
                        && st.level(b) == 2
                        && !st.dec.blocks[b].contains(&z)
                        && st.dec.blocks[b].len() != 2
                    {
                        return Err(format!("level-2 clique {:?} meets Q and is not a K_2", st.dec.blocks[b]));
                    }
                }
            }
            Ok(())
        }
        l => Err(format!(
            "clique of anchor {s} has level {l} and {simplicial} simplicial vertices"
        )),
    }
}

/// Level-1/2 block of `s` with exactly `want` simplicial vertices.
fn check_low_level(st: &Structure, s: usize, want: usize) -> Result<usize, String> {
    let q = st.home(s).ok_or_else(|| format!("anchor {s} is not simplicial"))?;
    let simplicial = st.dec.simplicial_vertices_of(q).len();
    if !matches!(st.level(q), 1 | 2) || simplicial != want {
        return Err(format!(
            "clique of anchor {s} has level {} and {simplicial} simplicial vertices",
            st.level(q)
        ));
    }
    Ok(q)
}

fn check_anchor(g: &Graph, st: &Structure, v: usize, kind: OpKind, anchors: &[usize]) -> Result<(), String> {
    match (kind, anchors) {
        (OpKind::AttachAtPendantCut, [x]) => check_op1(st, v, *x),
        (OpKind::AttachAtLevel2K2Cut, [x]) => check_op2(g, st, v, *x),
        (OpKind::AttachAtSimplicialOfRichClique, [s]) => check_op3(st, *s),
        (OpKind::TwinAttach, [s]) => check_low_level(st, *s, 2).map(|_| ()),
        (OpKind::TwinAttach, [s1, s2]) => {
            let q1 = check_low_level(st, *s1, 2)?;
            let q2 = check_low_level(st, *s2, 2)?;
            if s1 == s2 || q1 != q2 {
                return Err("the two anchors must be the simplicial vertices of one clique".into());
            }
            Ok(())
        }
        (OpKind::AttachAtUniqueSimplicial, [s]) => check_low_level(st, *s, 1).map(|_| ()),
        (_, other) => Err(format!("{} attachments given", other.len())),
    }
}

/// Anchor sets for which `kind` is applicable in `g`, ignoring clique
/// sizes and the star extension.
pub fn legal_anchors(g: &BlockGraph, v: usize, kind: OpKind) -> Result<Vec<Vec<usize>>, CharError> {
    g.check_vertex(v)?;
    let st = Structure::new(g, v)?;
    let mut out: Vec<Vec<usize>> = (0..g.n())
        .filter(|&x| x != v && check_anchor(g, &st, v, kind, &[x]).is_ok())
        .map(|x| vec![x])
        .collect();
    if kind == OpKind::TwinAttach {
        for q in 0..st.dec.blocks.len() {
            let simp = st.dec.simplicial_vertices_of(q);
            if simp.len() == 2 && check_anchor(g, &st, v, kind, &simp).is_ok() {
                out.push(simp);
            }
        }
    }
    Ok(out)
}

/// Applies one growth step to `G_i`, returning `G_{i+1}`.
pub fn apply_operation(g: &BlockGraph, v: usize, op: &OpDescriptor) -> Result<BlockGraph, CharError> {
    Ok(BlockGraph::trusted(apply_graph(g, v, op)?))
}

pub(crate) fn apply_graph(g: &Graph, v: usize, op: &OpDescriptor) -> Result<Graph, CharError> {
    g.check_vertex(v)?;
    let kind = op.kind;
    if op.attachments.is_empty() {
        return Err(violated(kind, "no attachments"));
    }
    for a in &op.attachments {
        g.check_vertex(a.anchor)?;
        if a.size < 2 {
            return Err(violated(kind, format!("clique size {} is below 2", a.size)));
        }
        if a.anchor == v {
            return Err(violated(kind, "cliques are never attached at the base vertex"));
        }
    }
    let st = Structure::new(g, v)?;
    let anchors: Vec<usize> = op.attachments.iter().map(|a| a.anchor).collect();
    check_anchor(g, &st, v, kind, &anchors).map_err(|d| violated(kind, d))?;

    let mut next = g.clone();
    let mut fresh: Vec<Option<Vec<usize>>> = vec![None; op.attachments.len()];
    if kind == OpKind::TwinAttach && op.attachments.len() == 2 {
        let z = st.root[st.home(anchors[0]).expect("anchor checked simplicial")];
        let mut both = g.clone();
        let f0 = both.attach_clique(anchors[0], op.attachments[0].size);
        let f1 = both.attach_clique(anchors[1], op.attachments[1].size);
        if v_ais_graph(&both, v, z) {
            // The root became v-AIS: only the first clique is added.
            fresh[0] = Some(next.attach_clique(anchors[0], op.attachments[0].size));
        } else {
            next = both;
            fresh = vec![Some(f0), Some(f1)];
        }
    } else {
        for (i, a) in op.attachments.iter().enumerate() {
            fresh[i] = Some(next.attach_clique(a.anchor, a.size));
        }
    }

    if let Some(ext) = op.star_extension {
        let att = op
            .attachments
            .get(ext.attachment)
            .ok_or_else(|| violated(kind, format!("extension refers to attachment {}", ext.attachment)))?;
        let Some(new) = &fresh[ext.attachment] else {
            return Err(violated(kind, "extension refers to an attachment that was not added"));
        };
        if att.size != 2 {
            return Err(violated(kind, "extension requires a K_2 attachment"));
        }
        if ext.size < 2 {
            return Err(violated(kind, format!("clique size {} is below 2", ext.size)));
        }
        let (w1, w2) = (att.anchor, new[0]);
        if v_ais_graph(&next, v, w1) {
            return Err(violated(kind, format!("extension guard: {w1} is v-AIS")));
        }
        next.attach_clique(w2, ext.size);
    }
    Ok(next)
}
