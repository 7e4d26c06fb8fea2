//! Block graphs with prescribed `α_min`, grown one unit at a time.
//!
//! Starting from a star of cliques around a cut vertex `v` (where
//! `α_min = 1`), each operation attaches one or two cliques (optionally
//! followed by a clique hung off a fresh `K_2`) so that `α_min` rises by
//! exactly one while `v` keeps attaining it. A [`CharCertificate`] records
//! such a growth sequence; [`verify_certificate`] replays it and
//! [`find_decomposition`] recovers one for a given graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphError;
use crate::invariants::InvariantError;

mod certificate;
mod decompose;
mod generate;
mod ops;

pub use certificate::{
    replay, verify_certificate, CharCertificate, Condition, VerifyReport, Violation,
};
pub use decompose::{find_decomposition, find_decomposition_at, Decomposition};
pub use generate::{generate_with_alphamin, DEFAULT_MAX_CLIQUE, DEFAULT_RETRIES};
pub use ops::{apply_operation, legal_anchors};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    /// Clique at a cut vertex other than `v` lying in a pendant clique.
    AttachAtPendantCut,
    /// Clique at a cut vertex that is not v-AIS and lies in a level-2 `K_2`.
    AttachAtLevel2K2Cut,
    /// Clique at a simplicial vertex of a level-1/2 clique with at least
    /// three simplicial vertices, or of a suitable level-3 clique.
    AttachAtSimplicialOfRichClique,
    /// One or two cliques at the two simplicial vertices of a level-1/2
    /// clique with exactly two simplicial vertices.
    TwinAttach,
    /// Clique at the only simplicial vertex of a level-1/2 clique.
    AttachAtUniqueSimplicial,
}

impl OpKind {
    pub const ALL: [OpKind; 5] = [
        OpKind::AttachAtPendantCut,
        OpKind::AttachAtLevel2K2Cut,
        OpKind::AttachAtSimplicialOfRichClique,
        OpKind::TwinAttach,
        OpKind::AttachAtUniqueSimplicial,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Attachment {
    pub anchor: usize,
    /// Clique size including the anchor; at least 2.
    pub size: usize,
}

/// A clique hung off the fresh end of a `K_2` attachment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarExtension {
    /// Index into [`OpDescriptor::attachments`]; that attachment has size 2.
    pub attachment: usize,
    pub size: usize,
}

/// One growth step. Fresh vertices are numbered after the existing ones:
/// the attachments' new vertices in order, then the extension's.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpDescriptor {
    pub kind: OpKind,
    pub attachments: Vec<Attachment>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_extension: Option<StarExtension>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("{kind:?} not applicable: {detail}")]
    PreconditionViolated { kind: OpKind, detail: String },
    #[error("replay failed at step {step}: {source}")]
    ReplayFailure {
        step: usize,
        #[source]
        source: Box<CharError>,
    },
    #[error("graph has no cut vertex")]
    NoCutVertex,
    #[error("alpha_min is attained only at simplicial vertices")]
    NoCutVertexWitness,
    #[error("graph is not connected")]
    Disconnected,
    #[error("no admissible operation found for step {step} after {attempts} attempts")]
    ExhaustedRetries { step: usize, attempts: usize },
    #[error("invalid generation parameters: {0}")]
    BadParameters(String),
}

pub(crate) fn violated(kind: OpKind, detail: impl Into<String>) -> CharError {
    CharError::PreconditionViolated {
        kind,
        detail: detail.into(),
    }
}
