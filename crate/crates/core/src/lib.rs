//! Block-graph structure and equitable colouring.
//!
//! A [`BlockGraph`] is a graph whose blocks are cliques. The modules below
//! compute its structure and independence parameters, build certificates
//! for `α_min` out of clique attachments, and colour the graphs produced by
//! the BIN PACKING reduction. The `oracle` module holds deliberately naive
//! reference implementations; `sweep` runs them against the fast paths over
//! every small block graph.

pub mod characterization;
pub mod coloring;
pub mod decomposition;
pub mod families;
pub mod gls;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod oracle;
pub mod sweep;

pub use coloring::Coloring;
pub use decomposition::{BlockDecomposition, LevelAssignment};
pub use graph::{BlockGraph, Graph, GraphError};
