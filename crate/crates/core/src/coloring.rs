//! Vertex colourings with class-size bookkeeping. Colours are `0..t`.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub t: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(t: usize, colors: Vec<usize>) -> Self {
        Coloring { t, colors }
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.t];
        for &c in &self.colors {
            if c < self.t {
                sizes[c] += 1;
            }
        }
        sizes
    }

    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Every class has size `⌊n/t⌋` or `⌈n/t⌉`.
    pub fn is_equitable(&self) -> bool {
        equitable_sizes(self.colors.len(), &self.class_sizes())
    }

    /// Product of class sizes, if it fits.
    pub fn size_product(&self) -> Option<u128> {
        self.class_sizes()
            .into_iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s as u128))
    }
}

pub(crate) fn equitable_sizes(n: usize, sizes: &[usize]) -> bool {
    let t = sizes.len();
    if t == 0 {
        return n == 0;
    }
    let lo = n / t;
    let hi = n.div_ceil(t);
    sizes.iter().all(|&s| s == lo || s == hi)
}

/// Class sizes of an equitable `t`-colouring of `n` vertices, largest first.
pub fn equitable_targets(n: usize, t: usize) -> Vec<usize> {
    let (q, r) = (n / t, n % t);
    (0..t).map(|i| if i < r { q + 1 } else { q }).collect()
}

/// Machine-friendly summary of a colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringDoc {
    pub t: usize,
    pub colors: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub proper: bool,
    pub equitable: bool,
}

impl ColoringDoc {
    pub fn new(g: &Graph, c: &Coloring) -> Self {
        ColoringDoc {
            t: c.t,
            colors: c.colors.clone(),
            class_sizes: c.class_sizes(),
            proper: c.is_proper(g),
            equitable: c.is_equitable(),
        }
    }
}
