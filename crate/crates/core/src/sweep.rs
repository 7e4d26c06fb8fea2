//! Exhaustive checks over every connected block graph up to a size bound.
//!
//! Graphs are checked independently on a rayon pool; violations are
//! reported sorted by the canonical form of the offending graph, so reports
//! do not depend on scheduling.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characterization::{find_decomposition, verify_certificate, CharError};
use crate::graph::{BlockGraph, GraphDoc};
use crate::invariants::{bounds_report_with_cap, InvariantError};
use crate::oracle::{canonical_form, enumerate_block_graphs, exact_equitable_colorable, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepCheck {
    /// `L ≤ χ= ≤ L + 1`.
    Conjecture,
    /// `dc ≤ α_min`.
    #[serde(rename = "dc-le-alphamin")]
    DcLeAlphaMin,
    /// A verified certificate of length `α_min` exists.
    Characterization,
    /// `L ≤ χ= ≤ Δ + 1`, with `Δ + 1` colours feasible.
    Eq1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub node_budget: u64,
    pub dc_cap: usize,
}

impl SweepOptions {
    pub fn new(max_n: usize) -> Self {
        SweepOptions {
            max_n,
            jobs: None,
            node_budget: crate::oracle::DEFAULT_NODE_BUDGET,
            dc_cap: crate::invariants::DEFAULT_DC_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepViolation {
    pub canonical: String,
    pub check: SweepCheck,
    pub graph: GraphDoc,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepScope {
    pub graphs: usize,
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub check: SweepCheck,
    pub scope: SweepScope,
    /// Graphs the check does not apply to or could not decide.
    pub skipped: usize,
    pub violations: Vec<SweepViolation>,
    pub runtime_ms: u128,
    pub jobs: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Characterization(#[from] CharError),
    #[error("cannot build thread pool: {0}")]
    Pool(String),
}

enum Outcome {
    Ok,
    Skipped,
    Violation(String),
}

fn check_graph(check: SweepCheck, g: &BlockGraph, opts: &SweepOptions) -> Result<Outcome, SweepError> {
    match check {
        SweepCheck::DcLeAlphaMin => {
            let p = bounds_report_with_cap(g, opts.dc_cap)?;
            Ok(match p.dc {
                None => Outcome::Skipped,
                Some(dc) if dc > p.alpha_min => {
                    Outcome::Violation(format!("dc = {dc} > alpha_min = {}", p.alpha_min))
                }
                Some(_) => Outcome::Ok,
            })
        }
        SweepCheck::Conjecture | SweepCheck::Eq1 => {
            let p = bounds_report_with_cap(g, 0)?;
            let upper = if check == SweepCheck::Conjecture {
                p.window[1]
            } else {
                p.hs_upper
            };
            // Equitable colourability is not monotone in t, so every count
            // up to the upper bound is decided.
            let mut chi = None;
            for t in 1..=upper {
                match exact_equitable_colorable(g, t, opts.node_budget) {
                    Ok(Some(_)) => {
                        chi = Some(t);
                        break;
                    }
                    Ok(None) => {}
                    Err(OracleError::SearchBudgetExceeded { .. }) => return Ok(Outcome::Skipped),
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(match chi {
                Some(chi) if chi < p.lower_bound => {
                    Outcome::Violation(format!("chi_eq = {chi} is below L = {}", p.lower_bound))
                }
                Some(_) => Outcome::Ok,
                None => Outcome::Violation(format!(
                    "not equitably colourable with at most {upper} colours (L = {})",
                    p.lower_bound
                )),
            })
        }
        SweepCheck::Characterization => match find_decomposition(g) {
            Err(CharError::NoCutVertex | CharError::NoCutVertexWitness) => Ok(Outcome::Skipped),
            Err(e) => Err(e.into()),
            Ok(None) => Ok(Outcome::Violation("no certificate found".into())),
            Ok(Some(d)) => {
                let report = verify_certificate(&d.certificate)?;
                let amin = crate::invariants::alpha_min(g)?.0;
                Ok(if !report.valid {
                    Outcome::Violation(format!("certificate fails: {:?}", report.violation))
                } else if report.r != amin {
                    Outcome::Violation(format!("certificate length {} but alpha_min {amin}", report.r))
                } else {
                    Outcome::Ok
                })
            }
        },
    }
}

pub fn run_sweep(check: SweepCheck, opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    let start = Instant::now();
    let graphs = enumerate_block_graphs(opts.max_n)?;
    run_sweep_on(check, &graphs, opts, start)
}

/// Runs `check` over the given graphs.
pub fn run_sweep_on(
    check: SweepCheck,
    graphs: &[BlockGraph],
    opts: &SweepOptions,
    start: Instant,
) -> Result<SweepReport, SweepError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| SweepError::Pool(e.to_string()))?;
    let jobs = pool.current_num_threads();
    let outcomes: Vec<Outcome> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| check_graph(check, g, opts))
            .collect::<Result<_, _>>()
    })?;
    let mut skipped = 0;
    let mut violations = Vec::new();
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome {
            Outcome::Ok => {}
            Outcome::Skipped => skipped += 1,
            Outcome::Violation(details) => violations.push(SweepViolation {
                canonical: canonical_form(g)?.hex(),
                check,
                graph: GraphDoc::from(g),
                details,
            }),
        }
    }
    violations.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    Ok(SweepReport {
        check,
        scope: SweepScope {
            graphs: graphs.len(),
            max_n: opts.max_n,
        },
        skipped,
        violations,
        runtime_ms: start.elapsed().as_millis(),
        jobs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for check in [
            SweepCheck::Conjecture,
            SweepCheck::DcLeAlphaMin,
            SweepCheck::Characterization,
            SweepCheck::Eq1,
        ] {
            let mut opts = SweepOptions::new(6);
            opts.jobs = Some(2);
            let report = run_sweep(check, &opts).unwrap();
            assert!(report.passed(), "{check:?}: {:?}", report.violations);
            assert_eq!(report.scope.graphs, 1 + 1 + 2 + 4 + 9 + 22);
        }
    }

    #[test]
    fn explicit_graph_list() {
        let graphs = vec![crate::families::complete(4), crate::families::path(5)];
        let report = run_sweep_on(SweepCheck::Eq1, &graphs, &SweepOptions::new(5), Instant::now()).unwrap();
        assert!(report.passed());
        assert_eq!(report.scope.graphs, 2);
    }
}
