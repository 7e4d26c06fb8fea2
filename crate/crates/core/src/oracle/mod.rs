//! Independent ground truth: exhaustive searches that share no code paths
//! with the structural fast paths they check.

use thiserror::Error;

use crate::gls::InstanceError;
use crate::graph::GraphError;

pub mod binpack;
pub mod brute;
pub mod canon;
pub mod enumerate;
pub mod equitable;

pub use binpack::bin_packing_decide;
pub use brute::{
    brute_alpha, brute_alpha_min, brute_alpha_with, brute_alpha_with_all, brute_dc, brute_is_ais,
    maximum_independent_sets, DEFAULT_BRUTE_CAP,
};
pub use canon::{canonical_form, canonical_form_colored, CanonicalForm};
pub use enumerate::{counts_by_size, enumerate_block_graphs, filter_count_block_graphs};
pub use equitable::{
    check_coloring, equitable_chromatic_number, exact_equitable_colorable, spectrum, ColoringCheck,
    SpectrumReport, DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("input of size {n} exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} has no colour")]
    UncoloredVertex(usize),
    #[error("vertex {vertex} has colour {color}, outside 0..{t}")]
    ColorOutOfRange { vertex: usize, color: usize, t: usize },
    #[error("search gave up after {nodes} nodes")]
    SearchBudgetExceeded { nodes: u64 },
    #[error("{t} colours exceed the search limit of {cap}")]
    TooManyColors { t: usize, cap: usize },
    #[error("colour cap {cap} exceeds the vertex count {n}")]
    CapAboveVertexCount { cap: usize, n: usize },
}
