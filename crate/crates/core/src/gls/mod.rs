//! GLS block graphs built from BIN PACKING instances, and their colourings.
//!
//! `GLS(A, k, B)` consists of one flower `F(a_j, k+1)` per item and a
//! central flower `F(B, k+1)`. A flower `F(a, k+1)` is `a + 1` disjoint
//! copies of `K_k` (its petals) plus a universal vertex joined to all of
//! them. The central universal vertex `y_0` is joined to every other `y_j`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BlockGraph, Graph};

mod alternating;
mod instance;
mod nplus2;
mod uniform;

pub use alternating::{alternating_components, AlternatingComponent, ComponentKind};
pub use instance::{BinPackingInstance, InstanceError};
pub use nplus2::{color_nplus2, color_nplus2_with_stats, NPlus2Stats};
pub use uniform::{color_uniform, color_uniform_with, Deferral, UniformColoring, equitably_k1_colorable_uniform, realize_flower, CountMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlsError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("a*n = {an} differs from k*B = {kb}")]
    NotUniformConsistent { an: usize, kb: usize },
    #[error("t = {t} is below the threshold k + 2 = {min}")]
    TBelowThreshold { t: usize, min: usize },
    #[error("matrix fill failed at row {row}: {detail}")]
    MatrixFill { row: usize, detail: String },
    #[error("flower counts cannot be realised: {0}")]
    Unrealizable(String),
    #[error("local search stopped at a non-equitable colouring with class sizes {sizes:?}")]
    NotEquitableAtFixpoint { sizes: Vec<usize>, colors: Vec<usize> },
    #[error("colours {0} and {1} induce a cycle")]
    CycleFound(usize, usize),
    #[error("colour pair ({i}, {j}) is invalid for {t} colours")]
    BadColorPair { i: usize, j: usize, t: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlsGraph {
    #[serde(skip)]
    pub graph: BlockGraph,
    pub instance: BinPackingInstance,
    /// `universal[j]` is `y_j`; flower 0 is the central one.
    pub universal: Vec<usize>,
    pub flower_of: Vec<usize>,
    /// `petals[j]` lists the `K_k` components of flower `j`.
    pub petals: Vec<Vec<Vec<usize>>>,
}

impl GlsGraph {
    pub fn n_items(&self) -> usize {
        self.instance.items.len()
    }

    pub fn k(&self) -> usize {
        self.instance.k
    }

    /// Pendant-clique count minus one: `B` for flower 0, `a_j` otherwise.
    pub fn flower_param(&self, j: usize) -> usize {
        if j == 0 {
            self.instance.capacity
        } else {
            self.instance.items[j - 1]
        }
    }

    pub fn flower_size(&self, j: usize) -> usize {
        1 + self.k() * (self.flower_param(j) + 1)
    }

    /// `(k+1)(kB+n+1)`.
    pub fn expected_order(&self) -> usize {
        let inst = &self.instance;
        (inst.k + 1) * (inst.k * inst.capacity + inst.items.len() + 1)
    }

    /// `n + 1 + kB`, attained at `y_0`.
    pub fn expected_alpha_min(&self) -> usize {
        let inst = &self.instance;
        inst.items.len() + 1 + inst.k * inst.capacity
    }
}

pub fn build_gls(inst: &BinPackingInstance) -> Result<GlsGraph, GlsError> {
    inst.validate()?;
    let k = inst.k;
    let params: Vec<usize> = std::iter::once(inst.capacity)
        .chain(inst.items.iter().copied())
        .collect();
    let mut g = Graph::empty(0);
    let mut universal = Vec::with_capacity(params.len());
    let mut flower_of = Vec::new();
    let mut petals = Vec::with_capacity(params.len());
    for (j, &a) in params.iter().enumerate() {
        let y = g.add_vertex();
        flower_of.push(j);
        universal.push(y);
        let mut flower = Vec::with_capacity(a + 1);
        for _ in 0..=a {
            let petal = g.attach_clique(y, k + 1);
            flower_of.extend(std::iter::repeat_n(j, petal.len()));
            flower.push(petal);
        }
        petals.push(flower);
    }
    for &y in &universal[1..] {
        g.add_edge(universal[0], y).expect("universal vertices are distinct");
    }
    Ok(GlsGraph {
        graph: BlockGraph::trusted(g),
        instance: inst.clone(),
        universal,
        flower_of,
        petals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::graph::validate_block_graph;
    use crate::invariants::alpha_min;

    fn gls(items: &[usize], k: usize, b: usize) -> GlsGraph {
        build_gls(&BinPackingInstance::new(items.to_vec(), k, b).unwrap()).unwrap()
    }

    #[test]
    fn example_closed_forms() {
        let g = gls(&[3, 3, 3, 3], 3, 4);
        assert_eq!(g.graph.n(), 68);
        assert_eq!(g.expected_order(), 68);
        assert_eq!(decompose(&g.graph).omega(), 4);
        assert_eq!(alpha_min(&g.graph).unwrap().0, 17);
        assert!(validate_block_graph(&g.graph).is_ok());
    }

    #[test]
    fn small_orders() {
        assert_eq!(gls(&[2, 2], 1, 4).graph.n(), 14);
        assert_eq!(gls(&[1], 1, 1).graph.n(), 6);
    }

    #[test]
    fn invalid_instances() {
        let bad = BinPackingInstance {
            items: vec![3, 3],
            k: 1,
            capacity: 4,
        };
        assert!(matches!(
            build_gls(&bad),
            Err(GlsError::Instance(InstanceError::SumMismatch { .. }))
        ));
        let big = BinPackingInstance {
            items: vec![5, 3],
            k: 2,
            capacity: 4,
        };
        assert!(matches!(
            build_gls(&big),
            Err(GlsError::Instance(InstanceError::ItemTooLarge { .. }))
        ));
    }
}
