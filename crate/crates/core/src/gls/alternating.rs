use serde::Serialize;

use crate::coloring::Coloring;
use crate::graph::Graph;

use super::GlsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    IsolatedVertex,
    IsolatedEdge,
    /// A centre with at least two leaves.
    Star,
    NonStarTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

/// Components of the subgraph induced by colour classes `i` and `j`.
pub fn alternating_components(
    g: &Graph,
    c: &Coloring,
    i: usize,
    j: usize,
) -> Result<Vec<AlternatingComponent>, GlsError> {
    if i == j || i >= c.t || j >= c.t {
        return Err(GlsError::BadColorPair { i, j, t: c.t });
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| c.colors[v] == i || c.colors[v] == j).collect();
    let (sub, map) = g.induced(&keep);
    let mut out = Vec::new();
    for comp in sub.components() {
        let edges: usize = comp.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
        if edges >= comp.len() {
            return Err(GlsError::CycleFound(i, j));
        }
        let kind = match comp.len() {
            1 => ComponentKind::IsolatedVertex,
            2 => ComponentKind::IsolatedEdge,
            len if comp.iter().any(|&v| sub.degree(v) == len - 1) => ComponentKind::Star,
            _ => ComponentKind::NonStarTree,
        };
        let mut vertices: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
        vertices.sort_unstable();
        out.push(AlternatingComponent { kind, vertices });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_is_a_non_star_tree() {
        let comps = alternating_components(&Graph::path(4), &Coloring::new(2, vec![0, 1, 0, 1]), 0, 1).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, ComponentKind::NonStarTree);
    }

    #[test]
    fn triangle_pair_is_an_edge() {
        let comps = alternating_components(&Graph::complete(3), &Coloring::new(3, vec![0, 1, 2]), 0, 1).unwrap();
        assert_eq!(comps, vec![AlternatingComponent { kind: ComponentKind::IsolatedEdge, vertices: vec![0, 1] }]);
    }

    #[test]
    fn cycles_are_reported() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            alternating_components(&c4, &Coloring::new(2, vec![0, 1, 0, 1]), 0, 1),
            Err(GlsError::CycleFound(0, 1))
        );
    }
}
