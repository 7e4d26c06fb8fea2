//! Canonical labelling of small graphs by partition refinement and
//! individualisation, with automorphism pruning.

use crate::graph::Graph;

use super::OracleError;

/// Largest graph accepted by [`canonical_form`].
pub const CANON_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Isomorphism-invariant encoding: vertex count, vertex colours in
    /// canonical order, then the upper adjacency triangle as bits.
    pub bytes: Vec<u8>,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Canonical form of an uncoloured graph.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, OracleError> {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form of a vertex-coloured graph; isomorphisms must preserve
/// colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> Result<CanonicalForm, OracleError> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(OracleError::TooLarge { n, cap: CANON_CAP });
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<Vec<usize>> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut search = Search {
        g,
        colors,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(cells, &mut Vec::new());
    let (bytes, order) = search.best.unwrap_or_else(|| (encode(g, colors, &[]), Vec::new()));
    Ok(CanonicalForm { bytes, order })
}

fn encode(g: &Graph, colors: &[u32], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = Vec::with_capacity(1 + 4 * n + n * n / 16 + 1);
    bytes.push(n as u8);
    for &v in order {
        bytes.extend_from_slice(&colors[v].to_be_bytes());
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for i in 0..n {
        for j in i + 1..n {
            acc = (acc << 1) | u8::from(g.has_edge(order[i], order[j]));
            bits += 1;
            if bits == 8 {
                bytes.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        bytes.push(acc << (8 - bits));
    }
    bytes
}

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Only cell order and adjacency counts influence
/// the result, so it commutes with relabelling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0; n];
    'outer: loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        for si in 0..cells.len() {
            let mut count = vec![0usize; n];
            for &s in &cells[si] {
                for &w in g.neighbors(s) {
                    count[w] += 1;
                }
            }
            let mut split = false;
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in &cells {
                if cell.len() > 1 && cell.iter().any(|&v| count[v] != count[cell[0]]) {
                    let mut keys: Vec<usize> = cell.iter().map(|&v| count[v]).collect();
                    keys.sort_unstable();
                    keys.dedup();
                    for k in keys {
                        next.push(cell.iter().copied().filter(|&v| count[v] == k).collect());
                    }
                    split = true;
                } else {
                    next.push(cell.clone());
                }
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    first: Option<(Vec<u8>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms as vertex maps.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to unwind the search to `depth`.
    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(order, path);
        }
        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("partition is not discrete");
        let mut tried: Vec<usize> = Vec::new();
        for &u in &cells[target] {
            if !tried.is_empty() && self.same_orbit(path, &tried, u) {
                continue;
            }
            tried.push(u);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != u).collect();
            child[target] = vec![u];
            child.insert(target + 1, rest);
            path.push(u);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(depth) = jump {
                if depth < path.len() {
                    return Some(depth);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let bytes = encode(self.g, self.colors, &order);
        let Some((first_bytes, first_order, first_path)) = &self.first else {
            self.first = Some((bytes.clone(), order.clone(), path.to_vec()));
            self.best = Some((bytes, order));
            return None;
        };
        if &bytes == first_bytes {
            let aut = map_between(first_order, &order);
            let common = first_path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            self.automorphisms.push(aut);
            return Some(common);
        }
        let best = self.best.as_mut().expect("best is set with first");
        if bytes == best.0 {
            let aut = map_between(&best.1, &order);
            self.automorphisms.push(aut);
        } else if bytes < best.0 {
            *best = (bytes, order);
        }
        None
    }

    /// Whether `u` shares an orbit with an already explored vertex under the
    /// automorphisms fixing `path` pointwise.
    fn same_orbit(&self, path: &[usize], tried: &[usize], u: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let nx = p[x];
                p[x] = r;
                x = nx;
            }
            r
        }
        for aut in &self.automorphisms {
            if path.iter().all(|&p| aut[p] == p) {
                for (x, &y) in aut.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        let ru = find(&mut parent, u);
        tried.iter().any(|&w| find(&mut parent, w) == ru)
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut m = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        m[a] = b;
    }
    m
}
