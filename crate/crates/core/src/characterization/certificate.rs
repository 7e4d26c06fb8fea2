use serde::{Deserialize, Serialize};

use crate::decomposition::decompose_graph;
use crate::graph::{BlockGraph, GraphDoc};
use crate::invariants::{alpha_min_graph, alpha_with_graph};

use super::ops::apply_graph;
use super::{CharError, OpDescriptor};

/// A growth sequence `G_1 ⊂ … ⊂ G_r` from the closed neighbourhood of the
/// base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharCertificate {
    pub base_vertex: usize,
    pub base_graph: GraphDoc,
    pub steps: Vec<OpDescriptor>,
}

impl CharCertificate {
    /// Length of the sequence, which equals `α_min` of the final graph.
    pub fn r(&self) -> usize {
        self.steps.len() + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `G_1` is the closed neighbourhood of a cut vertex `v`.
    A,
    /// `α_min` grows by exactly one per step.
    B,
    /// `v` attains `α_min` in every `G_i`.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1-based index `i` of the offending `G_i`.
    pub graph_index: usize,
    pub condition: Condition,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub r: usize,
    pub alpha_min: Vec<usize>,
    pub alpha_at_base: Vec<usize>,
    pub violation: Option<Violation>,
}

/// All graphs `G_1, …, G_r` of the certificate.
pub fn replay(cert: &CharCertificate) -> Result<Vec<BlockGraph>, CharError> {
    let base = cert.base_graph.to_block_graph()?;
    base.check_vertex(cert.base_vertex)?;
    let mut graphs = vec![base];
    for (i, step) in cert.steps.iter().enumerate() {
        let prev = graphs.last().expect("base graph is present");
        let next = apply_graph(prev, cert.base_vertex, step).map_err(|e| CharError::ReplayFailure {
            step: i + 1,
            source: Box::new(e),
        })?;
        graphs.push(BlockGraph::trusted(next));
    }
    Ok(graphs)
}

pub fn verify_certificate(cert: &CharCertificate) -> Result<VerifyReport, CharError> {
    let graphs = replay(cert)?;
    let v = cert.base_vertex;
    let alpha_min: Vec<usize> = graphs
        .iter()
        .map(|g| alpha_min_graph(g).map(|(a, _)| a))
        .collect::<Result<_, _>>()?;
    let alpha_at_base: Vec<usize> = graphs.iter().map(|g| alpha_with_graph(g, v)).collect();

    let base = &graphs[0];
    let mut violation = None;
    if base.closed_neighborhood(v).len() != base.n() || !base.is_connected() {
        violation = Some(Violation {
            graph_index: 1,
            condition: Condition::A,
            detail: format!("G_1 is not the closed neighbourhood of {v}"),
        });
    } else if !decompose_graph(base).is_cut(v) {
        violation = Some(Violation {
            graph_index: 1,
            condition: Condition::A,
            detail: format!("{v} is not a cut vertex of G_1"),
        });
    }
    for i in 0..graphs.len() {
        if violation.is_some() {
            break;
        }
        if i > 0 && alpha_min[i] != alpha_min[i - 1] + 1 {
            violation = Some(Violation {
                graph_index: i + 1,
                condition: Condition::B,
                detail: format!("alpha_min went from {} to {}", alpha_min[i - 1], alpha_min[i]),
            });
        } else if alpha_at_base[i] != alpha_min[i] {
            violation = Some(Violation {
                graph_index: i + 1,
                condition: Condition::C,
                detail: format!("alpha(G, v) = {} but alpha_min = {}", alpha_at_base[i], alpha_min[i]),
            });
        }
    }
    Ok(VerifyReport {
        valid: violation.is_none(),
        r: cert.r(),
        alpha_min,
        alpha_at_base,
        violation,
    })
}
