//! Equitable `t`-colouring of uniform GLS graphs (all items equal to `a`)
//! for every `t ≥ k + 2`, by filling a colour-by-flower count matrix row by
//! row and then realising each flower's column as petal colourings.

use serde::Serialize;

use crate::coloring::{equitable_targets, Coloring};

use super::{build_gls, BinPackingInstance, GlsError, GlsGraph};

/// Decides equitable `(k+1)`-colourability of a uniform GLS graph: the
/// BIN PACKING instance with `n` copies of `a` is a YES instance iff `a | B`.
pub fn equitably_k1_colorable_uniform(a: usize, n: usize, k: usize, b: usize) -> Result<bool, GlsError> {
    if a == 0 || a * n != k * b {
        return Err(GlsError::NotUniformConsistent { an: a * n, kb: k * b });
    }
    Ok(b.is_multiple_of(a))
}

/// `entries[c][j]` counts vertices of flower `j` with colour `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountMatrix {
    pub t: usize,
    /// Vertices per petal.
    pub k: usize,
    pub entries: Vec<Vec<usize>>,
    /// Per column: at most this many vertices of one colour.
    pub caps: Vec<usize>,
    /// Per column: vertex count of the flower.
    pub flower_sizes: Vec<usize>,
    /// Per column: colour of the universal vertex.
    pub universal_color: Vec<usize>,
    /// Per row: target class size.
    pub targets: Vec<usize>,
}

impl CountMatrix {
    pub fn columns(&self) -> usize {
        self.caps.len()
    }

    /// Checks the entry caps and the row and column sums. Each universal
    /// colour must appear exactly once in its own flower, and no flower may
    /// miss more than `t - k - 1` non-universal colours.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (c, row) in self.entries.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e > self.caps[j] {
                    return Err(format!("entry [{c}][{j}] = {e} exceeds cap {}", self.caps[j]));
                }
            }
            let sum: usize = row.iter().sum();
            if sum != self.targets[c] {
                return Err(format!("row {c} sums to {sum}, target {}", self.targets[c]));
            }
        }
        for j in 0..self.columns() {
            let sum: usize = self.entries.iter().map(|r| r[j]).sum();
            if sum != self.flower_sizes[j] {
                return Err(format!("column {j} sums to {sum}, flower has {}", self.flower_sizes[j]));
            }
            let u = self.universal_color[j];
            if self.entries[u][j] != 1 {
                return Err(format!(
                    "universal colour {u} appears {} times in flower {j}",
                    self.entries[u][j]
                ));
            }
            let excluded = self.excluded_colors(j);
            if excluded + self.k + 1 > self.t {
                return Err(format!(
                    "flower {j} misses {excluded} colours, more than t - k - 1 = {}",
                    self.t.saturating_sub(self.k + 1)
                ));
            }
        }
        Ok(())
    }

    /// Colours other than the universal one that are absent from column `j`.
    pub fn excluded_colors(&self, j: usize) -> usize {
        (0..self.t)
            .filter(|&c| c != self.universal_color[j] && self.entries[c][j] == 0)
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformColoring {
    pub gls: GlsGraph,
    pub matrix: CountMatrix,
    pub coloring: Coloring,
}

/// Colours the uniform GLS graph with `n` items of size `a` using `t` colours.
pub fn color_uniform(a: usize, n: usize, k: usize, b: usize, t: usize) -> Result<UniformColoring, GlsError> {
    color_uniform_with(a, n, k, b, t, Deferral::Drop)
}

pub fn color_uniform_with(
    a: usize,
    n: usize,
    k: usize,
    b: usize,
    t: usize,
    deferral: Deferral,
) -> Result<UniformColoring, GlsError> {
    equitably_k1_colorable_uniform(a, n, k, b)?;
    if t < k + 2 {
        return Err(GlsError::TBelowThreshold { t, min: k + 2 });
    }
    let gls = build_gls(&BinPackingInstance::uniform(a, n, k, b)?)?;
    let matrix = fill_matrix(&gls, t, deferral)?;
    matrix
        .check_invariants()
        .map_err(|detail| GlsError::MatrixFill { row: t, detail })?;
    let mut colors = vec![usize::MAX; gls.graph.n()];
    for j in 0..=n {
        colors[gls.universal[j]] = matrix.universal_color[j];
        let column: Vec<usize> = matrix.entries.iter().map(|r| r[j]).collect();
        let petal_colors = realize_flower(&column, gls.flower_param(j), k, matrix.universal_color[j])?;
        for (petal, cs) in gls.petals[j].iter().zip(petal_colors) {
            for (&v, c) in petal.iter().zip(cs) {
                colors[v] = c;
            }
        }
    }
    Ok(UniformColoring {
        coloring: Coloring::new(t, colors),
        matrix,
        gls,
    })
}

struct Filler {
    t: usize,
    cols: usize,
    cell: Vec<Vec<Option<usize>>>,
    caps: Vec<usize>,
    sizes: Vec<usize>,
}

impl Filler {
    fn col_remaining(&self, j: usize) -> usize {
        let used: usize = (0..self.t).filter_map(|c| self.cell[c][j]).sum();
        self.sizes[j] - used
    }

    fn row_sum(&self, c: usize) -> usize {
        self.cell[c].iter().flatten().sum()
    }

    /// A column whose remaining demand needs every empty entry at its cap
    /// is completed at once.
    fn complete_forced_columns(&mut self, row: usize) -> Result<(), GlsError> {
        for j in 0..self.cols {
            let empty: Vec<usize> = (0..self.t).filter(|&c| self.cell[c][j].is_none()).collect();
            let remaining = self.col_remaining(j);
            let room = empty.len() * self.caps[j];
            if remaining > room {
                return Err(GlsError::MatrixFill {
                    row,
                    detail: format!("column {j} needs {remaining} but only {room} fits"),
                });
            }
            if remaining == room && !empty.is_empty() {
                for c in empty {
                    self.cell[c][j] = Some(self.caps[j]);
                }
            }
        }
        Ok(())
    }
}

/// What happens to a boundary completion whose entry was pre-filled by a
/// universal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Deferral {
    /// Carried to the first later row with an empty entry in that column.
    FirstEmptyLaterRow,
    /// Dropped; the column is finished by later sweeps and completions.
    Drop,
}

pub(crate) fn fill_matrix(gls: &GlsGraph, t: usize, deferral: Deferral) -> Result<CountMatrix, GlsError> {
    let n = gls.n_items();
    let cols = n + 1;
    let total = gls.graph.n();
    let targets = equitable_targets(total, t);
    let caps: Vec<usize> = (0..cols).map(|j| gls.flower_param(j) + 1).collect();
    let sizes: Vec<usize> = (0..cols).map(|j| gls.flower_size(j)).collect();
    let a1 = caps[1];
    if n * a1 < targets[0] {
        return Err(GlsError::MatrixFill {
            row: 0,
            detail: format!("n(a+1) = {} is below the largest class {}", n * a1, targets[0]),
        });
    }

    let mut f = Filler {
        t,
        cols,
        cell: vec![vec![None; cols]; t],
        caps,
        sizes,
    };

    // Universal vertices: y_0 takes colour 0, the rest are spread over
    // colours 1..t in consecutive runs of length ⌈(n - i + 1)/(t - 1)⌉.
    let mut universal_color = vec![0; cols];
    f.cell[0][0] = Some(1);
    let mut next = 1;
    for i in 1..t {
        let run = (n + 1).saturating_sub(i).div_ceil(t - 1);
        for _ in 0..run {
            universal_color[next] = i;
            f.cell[i][next] = Some(1);
            next += 1;
        }
    }
    debug_assert_eq!(next, cols);

    // Row 0: whole columns of a + 1 from flower 1 on, remainder in column l1.
    let need0 = targets[0] - 1;
    let l1 = need0.div_ceil(a1);
    for j in 1..cols {
        f.cell[0][j] = Some(if j < l1 {
            a1
        } else if j == l1 {
            need0 - (l1 - 1) * a1
        } else {
            0
        });
    }
    let mut end = l1;
    f.complete_forced_columns(0)?;

    // Boundary completions that hit a pre-filled entry wait for the first
    // later row with an empty entry in that column.
    let mut deferred: Vec<(usize, usize)> = Vec::new();
    for (row, &target) in targets.iter().enumerate().skip(1) {
        let have = f.row_sum(row);
        if have > target {
            return Err(GlsError::MatrixFill {
                row,
                detail: format!("pre-filled entries sum to {have}, above target {}", target),
            });
        }
        let mut need = target - have;
        let place = |f: &mut Filler, j: usize, want: usize, need: &mut usize| {
            let v = want.min(f.col_remaining(j)).min(*need);
            f.cell[row][j] = Some(v);
            *need -= v;
        };
        deferred.retain(|&(j, amount)| {
            if f.cell[row][j].is_none() {
                place(&mut f, j, amount, &mut need);
                false
            } else {
                true
            }
        });
        let prev = f.cell[row - 1][end].unwrap_or(0);
        if prev < f.caps[end] {
            let amount = f.caps[end] - prev;
            if f.cell[row][end].is_none() {
                place(&mut f, end, amount, &mut need);
            } else if deferral == Deferral::FirstEmptyLaterRow {
                deferred.push((end, amount));
            }
        }
        let mut last = end;
        for step in 1..=cols {
            if need == 0 {
                break;
            }
            let j = (end + step) % cols;
            if f.cell[row][j].is_none() {
                let cap = f.caps[j];
                place(&mut f, j, cap, &mut need);
                last = j;
            }
        }
        if need > 0 {
            return Err(GlsError::MatrixFill {
                row,
                detail: format!("row is {need} short of target {}", target),
            });
        }
        for j in 0..cols {
            f.cell[row][j].get_or_insert(0);
        }
        end = last;
        f.complete_forced_columns(row)?;
    }

    Ok(CountMatrix {
        t,
        k: gls.k(),
        entries: f
            .cell
            .into_iter()
            .map(|r| r.into_iter().map(|e| e.unwrap_or(0)).collect())
            .collect(),
        caps: f.caps,
        flower_sizes: f.sizes,
        universal_color,
        targets,
    })
}

/// Splits one flower's colour counts over its `a + 1` petals of `k`
/// vertices each. `counts[universal_color]` must be exactly 1 (the
/// universal vertex); every other count is at most `a + 1`.
pub fn realize_flower(
    counts: &[usize],
    a: usize,
    k: usize,
    universal_color: usize,
) -> Result<Vec<Vec<usize>>, GlsError> {
    if counts.get(universal_color) != Some(&1) {
        return Err(GlsError::Unrealizable(format!(
            "universal colour {universal_color} must have count 1, counts {counts:?}"
        )));
    }
    let mut rest = counts.to_vec();
    rest[universal_color] = 0;
    let sum: usize = rest.iter().sum();
    if sum != k * (a + 1) {
        return Err(GlsError::Unrealizable(format!(
            "petal vertices sum to {sum}, expected {}",
            k * (a + 1)
        )));
    }
    if let Some(c) = rest.iter().position(|&x| x > a + 1) {
        return Err(GlsError::Unrealizable(format!(
            "colour {c} has count {} above a + 1 = {}",
            rest[c],
            a + 1
        )));
    }
    let mut petals = Vec::with_capacity(a + 1);
    for _ in 0..=a {
        let mut order: Vec<usize> = (0..rest.len()).filter(|&c| rest[c] > 0).collect();
        order.sort_by_key(|&c| (std::cmp::Reverse(rest[c]), c));
        if order.len() < k {
            return Err(GlsError::Unrealizable(format!(
                "only {} colours left for a petal of {k}",
                order.len()
            )));
        }
        order.truncate(k);
        for &c in &order {
            rest[c] -= 1;
        }
        order.sort_unstable();
        petals.push(order);
    }
    Ok(petals)
}
