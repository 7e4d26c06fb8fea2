//! Command-line front end for the `blockcolor` library.
//!
//! Every command writes one JSON document (or DOT / plain text where asked)
//! to the supplied writer. Exit codes: 0 success, 1 a check found
//! violations, 2 usage or input errors, 3 internal failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use blockcolor::characterization::{
    find_decomposition, generate_with_alphamin, verify_certificate, CharCertificate, CharError, DEFAULT_MAX_CLIQUE,
};
use blockcolor::coloring::ColoringDoc;
use blockcolor::decomposition::{clique_levels, decompose, is_clique_star};
use blockcolor::gls::{build_gls, color_nplus2_with_stats, color_uniform, BinPackingInstance, GlsError};
use blockcolor::graph::{validate_block_graph, BlockGraph, GraphDoc};
use blockcolor::invariants::{alpha, alpha_min, alpha_with, bounds_report, dc_exact, is_ais, is_v_ais, DEFAULT_DC_CAP};
use blockcolor::io::{read_graph_doc, to_dot, IoError};
use blockcolor::oracle::{
    bin_packing_decide, check_coloring, exact_equitable_colorable, spectrum, OracleError, DEFAULT_NODE_BUDGET,
};
use blockcolor::sweep::{run_sweep, SweepCheck, SweepError, SweepOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Default worker count for `verify` sweeps when `--jobs` is absent.
pub const JOBS_ENV: &str = "BLOCKCOLOR_JOBS";

#[derive(Debug, Parser)]
#[command(name = "blockcolor", version, about = "Block-graph parameters and equitable colouring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a graph file describes a block graph.
    Validate { graph: PathBuf },
    /// Structural parameters and the conjectured window for χ=.
    Params {
        graph: PathBuf,
        /// Skip the exact distance-to-cluster search above this order.
        #[arg(long, default_value_t = DEFAULT_DC_CAP)]
        dc_cap: usize,
    },
    /// Blocks, cut vertices and clique levels.
    Levels { graph: PathBuf },
    /// Whether a vertex lies in every maximum independent set.
    Ais {
        graph: PathBuf,
        #[arg(long)]
        w: usize,
        /// Restrict to maximum independent sets containing this vertex.
        #[arg(long)]
        base: Option<usize>,
    },
    /// Constructive characterisation of α_min.
    #[command(subcommand)]
    Char(CharCommand),
    /// GLS reduction graphs and their colourings.
    #[command(subcommand)]
    Gls(GlsCommand),
    /// Exact solvers.
    #[command(subcommand)]
    Exact(ExactCommand),
    /// List connected block graphs up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        /// Write one JSON graph file per graph into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive sweeps; exit 1 when any graph violates the check.
    Verify {
        check: CheckArg,
        #[arg(long)]
        max_n: usize,
        /// Worker threads (default: $BLOCKCOLOR_JOBS, else all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
enum CharCommand {
    /// Random block graph with prescribed α_min, plus its certificate.
    Gen {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_CLIQUE)]
        max_clique: usize,
    },
    /// Recover a certificate for a given graph.
    Decompose { graph: PathBuf },
    /// Replay and check a certificate.
    Verify { certificate: PathBuf },
}

#[derive(Debug, Subcommand)]
enum GlsCommand {
    /// Build the GLS graph of a BIN PACKING instance.
    Build {
        instance: PathBuf,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Equitable t-colouring of a uniform instance (n items of size a).
    ColorUniform(UniformArgs),
    /// Equitable (n+2)-colouring by local search.
    ColorN2 { instance: PathBuf },
}

#[derive(Debug, Args)]
struct UniformArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long = "B")]
    b: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Debug, Subcommand)]
enum ExactCommand {
    /// Equitable chromatic number.
    ChiEq {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Feasibility of every colour count from 1 to the cap.
    Spectrum {
        graph: PathBuf,
        #[arg(long)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Distance to cluster with a lexicographically first witness.
    Dc {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DC_CAP)]
        cap: usize,
    },
    /// Decide a BIN PACKING instance; prints YES or NO.
    Binpack {
        instance: PathBuf,
        /// Emit a JSON document with the packing instead of YES/NO.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Conjecture,
    DcLeAlphamin,
    Characterization,
    Eq1,
}

impl From<CheckArg> for SweepCheck {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Conjecture => SweepCheck::Conjecture,
            CheckArg::DcLeAlphamin => SweepCheck::DcLeAlphaMin,
            CheckArg::Characterization => SweepCheck::Characterization,
            CheckArg::Eq1 => SweepCheck::Eq1,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Graph(_)
            | OracleError::Instance(_)
            | OracleError::TooLarge { .. }
            | OracleError::EmptyGraph
            | OracleError::TooManyColors { .. }
            | OracleError::CapAboveVertexCount { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<GlsError> for CliError {
    fn from(e: GlsError) -> Self {
        match e {
            GlsError::Instance(_) | GlsError::NotUniformConsistent { .. } | GlsError::TBelowThreshold { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::ExhaustedRetries { .. } | CharError::ReplayFailure { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(internal)?;
    writeln!(out)?;
    Ok(())
}

fn load_graph(path: &Path) -> Result<BlockGraph, CliError> {
    read_graph_doc(path)?.to_block_graph().map_err(usage)
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<BinPackingInstance, CliError> {
    let inst: BinPackingInstance = load_json(path)?;
    inst.validate().map_err(usage)?;
    Ok(inst)
}

fn default_jobs() -> Result<Option<usize>, CliError> {
    match std::env::var(JOBS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("{JOBS_ENV} must be a positive integer, got {v:?}"))),
        _ => Ok(None),
    }
}

#[derive(Serialize)]
struct ValidateOutput {
    valid: bool,
    n: usize,
    edges: usize,
    connected: Option<bool>,
    error: Option<String>,
}

#[derive(Serialize)]
struct LevelsOutput {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    level: Vec<usize>,
    root: Vec<Option<usize>>,
    unleveled_singleton: Option<usize>,
    rounds: usize,
    max_level: usize,
    clique_star: bool,
    single_clique: bool,
}

#[derive(Serialize)]
struct AisOutput {
    w: usize,
    base: Option<usize>,
    ais: bool,
    alpha: usize,
    alpha_with_w: usize,
}

#[derive(Serialize)]
struct GenOutput {
    r: usize,
    seed: u64,
    max_clique: usize,
    graph: GraphDoc,
    certificate: CharCertificate,
    alpha_min: Vec<usize>,
}

#[derive(Serialize)]
struct DecomposeOutput {
    found: bool,
    alpha_min: usize,
    witness: Option<usize>,
    certificate: Option<CharCertificate>,
    vertex_map: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct GlsBuildOutput {
    instance: BinPackingInstance,
    graph: GraphDoc,
    order: usize,
    omega: usize,
    alpha_min: usize,
    alpha_min_witness: usize,
    universal: Vec<usize>,
    flower_of: Vec<usize>,
}

#[derive(Serialize)]
struct UniformOutput {
    instance: BinPackingInstance,
    t: usize,
    matrix: blockcolor::gls::CountMatrix,
    excluded_per_flower: Vec<usize>,
    coloring: ColoringDoc,
}

#[derive(Serialize)]
struct NPlus2Output {
    instance: BinPackingInstance,
    coloring: ColoringDoc,
    stats: blockcolor::gls::NPlus2Stats,
}

#[derive(Serialize)]
struct ChiEqOutput {
    n: usize,
    chi_eq: usize,
    lower_bound: usize,
    window: [usize; 2],
    in_window: bool,
    coloring: ColoringDoc,
}

#[derive(Serialize)]
struct BinpackOutput {
    feasible: bool,
    bins: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct EnumerateOutput {
    max_n: usize,
    counts: Vec<usize>,
    total: usize,
    out: Option<PathBuf>,
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Validate { graph } => {
            let doc = read_graph_doc(&graph)?;
            let edges = doc.edges.len();
            let (valid, connected, error) = match doc.to_graph() {
                Err(e) => (false, None, Some(e.to_string())),
                Ok(g) => match validate_block_graph(&g) {
                    Ok(()) => (true, Some(g.is_connected()), None),
                    Err(e) => (false, Some(g.is_connected()), Some(e.to_string())),
                },
            };
            emit(out, &ValidateOutput { valid, n: doc.n, edges, connected, error })?;
            Ok(if valid { EXIT_OK } else { EXIT_VIOLATIONS })
        }
        Command::Params { graph, dc_cap } => {
            let g = load_graph(&graph)?;
            let report = blockcolor::invariants::bounds_report_with_cap(&g, dc_cap).map_err(usage)?;
            emit(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::Levels { graph } => {
            let g = load_graph(&graph)?;
            let levels = clique_levels(&g).map_err(usage)?;
            let star = is_clique_star(&g).map_err(usage)?;
            let dec = decompose(&g);
            emit(
                out,
                &LevelsOutput {
                    blocks: dec.blocks,
                    cut_vertices: dec.cut_vertices,
                    max_level: levels.max_level(),
                    level: levels.level,
                    root: levels.root,
                    unleveled_singleton: levels.unleveled_singleton,
                    rounds: levels.rounds,
                    clique_star: star.is_star,
                    single_clique: star.single_clique,
                },
            )?;
            Ok(EXIT_OK)
        }
        Command::Ais { graph, w, base } => {
            let g = load_graph(&graph)?;
            let ais = match base {
                Some(v) => is_v_ais(&g, v, w),
                None => is_ais(&g, w),
            }
            .map_err(usage)?;
            let alpha_with_w = alpha_with(&g, w).map_err(usage)?;
            emit(out, &AisOutput { w, base, ais, alpha: alpha(&g), alpha_with_w })?;
            Ok(EXIT_OK)
        }
        Command::Char(c) => run_char(c, out),
        Command::Gls(c) => run_gls(c, out),
        Command::Exact(c) => run_exact(c, out),
        Command::Enumerate { max_n, out: dir } => {
            let graphs = blockcolor::oracle::enumerate_block_graphs(max_n)?;
            let counts = blockcolor::oracle::counts_by_size(&graphs, max_n);
            if let Some(dir) = &dir {
                fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
                let mut index = vec![0usize; max_n + 1];
                for g in &graphs {
                    let n = g.n();
                    let path = dir.join(format!("n{n:02}_{:05}.json", index[n]));
                    index[n] += 1;
                    let text = serde_json::to_string(&GraphDoc::from(g)).map_err(internal)?;
                    fs::write(&path, text + "\n")?;
                }
            }
            emit(
                out,
                &EnumerateOutput { max_n, total: graphs.len(), counts, out: dir },
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { check, max_n, jobs, budget } => {
            let mut opts = SweepOptions::new(max_n);
            opts.jobs = match jobs {
                Some(0) => return Err(usage("--jobs must be at least 1")),
                Some(j) => Some(j),
                None => default_jobs()?,
            };
            opts.node_budget = budget;
            let report = run_sweep(check.into(), &opts).map_err(|e| match e {
                SweepError::Oracle(o) => CliError::from(o),
                other => internal(other),
            })?;
            log::info!(
                "{:?}: {} graphs, {} skipped, {} violations in {} ms",
                report.check,
                report.scope.graphs,
                report.skipped,
                report.violations.len(),
                report.runtime_ms
            );
            emit(out, &report)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
        }
    }
}

fn run_char(cmd: CharCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        CharCommand::Gen { r, seed, max_clique } => {
            let (g, certificate) = generate_with_alphamin(r, max_clique, seed)?;
            let report = verify_certificate(&certificate)?;
            if !report.valid {
                return Err(internal(format!("generated certificate fails: {:?}", report.violation)));
            }
            emit(
                out,
                &GenOutput {
                    r,
                    seed,
                    max_clique,
                    graph: GraphDoc::from(&g),
                    certificate,
                    alpha_min: report.alpha_min,
                },
            )?;
            Ok(EXIT_OK)
        }
        CharCommand::Decompose { graph } => {
            let g = load_graph(&graph)?;
            let (amin, _) = alpha_min(&g).map_err(usage)?;
            match find_decomposition(&g)? {
                Some(d) => {
                    emit(
                        out,
                        &DecomposeOutput {
                            found: true,
                            alpha_min: amin,
                            witness: Some(d.vertex_map[d.certificate.base_vertex]),
                            certificate: Some(d.certificate),
                            vertex_map: Some(d.vertex_map),
                        },
                    )?;
                    Ok(EXIT_OK)
                }
                None => {
                    log::warn!("no certificate found: potential counterexample");
                    emit(
                        out,
                        &DecomposeOutput { found: false, alpha_min: amin, witness: None, certificate: None, vertex_map: None },
                    )?;
                    Ok(EXIT_VIOLATIONS)
                }
            }
        }
        CharCommand::Verify { certificate } => {
            let cert: CharCertificate = load_json(&certificate)?;
            let report = verify_certificate(&cert)?;
            emit(out, &report)?;
            Ok(if report.valid { EXIT_OK } else { EXIT_VIOLATIONS })
        }
    }
}

fn run_gls(cmd: GlsCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        GlsCommand::Build { instance, dot } => {
            let inst = load_instance(&instance)?;
            let gls = build_gls(&inst)?;
            if dot {
                let labels: Vec<String> = (0..gls.graph.n())
                    .map(|v| match gls.universal.iter().position(|&y| y == v) {
                        Some(j) => format!("y{j}"),
                        None => format!("{v}"),
                    })
                    .collect();
                write!(out, "{}", to_dot(&gls.graph, Some(&labels), None))?;
                return Ok(EXIT_OK);
            }
            let (amin, witness) = alpha_min(&gls.graph).map_err(internal)?;
            emit(
                out,
                &GlsBuildOutput {
                    graph: GraphDoc::from(&gls.graph),
                    order: gls.graph.n(),
                    omega: decompose(&gls.graph).omega(),
                    alpha_min: amin,
                    alpha_min_witness: witness,
                    universal: gls.universal.clone(),
                    flower_of: gls.flower_of.clone(),
                    instance: gls.instance,
                },
            )?;
            Ok(EXIT_OK)
        }
        GlsCommand::ColorUniform(UniformArgs { a, n, k, b, t }) => {
            let res = color_uniform(a, n, k, b, t)?;
            let check = check_coloring(&res.gls.graph, &res.coloring)?;
            if !(check.proper && check.equitable) {
                return Err(internal(format!("colouring fails its check: {check:?}")));
            }
            emit(
                out,
                &UniformOutput {
                    t,
                    excluded_per_flower: (0..res.matrix.columns()).map(|j| res.matrix.excluded_colors(j)).collect(),
                    coloring: ColoringDoc::new(&res.gls.graph, &res.coloring),
                    matrix: res.matrix,
                    instance: res.gls.instance,
                },
            )?;
            Ok(EXIT_OK)
        }
        GlsCommand::ColorN2 { instance } => {
            let inst = load_instance(&instance)?;
            let gls = build_gls(&inst)?;
            let (coloring, stats) = color_nplus2_with_stats(&gls)?;
            emit(
                out,
                &NPlus2Output { coloring: ColoringDoc::new(&gls.graph, &coloring), stats, instance: gls.instance },
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn run_exact(cmd: ExactCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        ExactCommand::ChiEq { graph, budget } => {
            let g = load_graph(&graph)?;
            let params = bounds_report(&g).map_err(usage)?;
            let start = Instant::now();
            let mut found = None;
            for t in 1..=g.n().max(1) {
                if let Some(c) = exact_equitable_colorable(&g, t, budget)? {
                    found = Some((t, c));
                    break;
                }
            }
            let (chi_eq, coloring) = found.ok_or_else(|| usage("the empty graph has no colouring to report"))?;
            log::info!("chi_eq = {chi_eq} in {:?}", start.elapsed());
            emit(
                out,
                &ChiEqOutput {
                    n: g.n(),
                    chi_eq,
                    lower_bound: params.lower_bound,
                    window: params.window,
                    in_window: params.window[0] <= chi_eq && chi_eq <= params.window[1],
                    coloring: ColoringDoc::new(&g, &coloring),
                },
            )?;
            Ok(EXIT_OK)
        }
        ExactCommand::Spectrum { graph, cap, budget } => {
            let g = load_graph(&graph)?;
            emit(out, &spectrum(&g, cap, budget)?)?;
            Ok(EXIT_OK)
        }
        ExactCommand::Dc { graph, cap } => {
            let g = load_graph(&graph)?;
            emit(out, &dc_exact(&g, cap).map_err(usage)?)?;
            Ok(EXIT_OK)
        }
        ExactCommand::Binpack { instance, json } => {
            let inst = load_instance(&instance)?;
            let bins = bin_packing_decide(&inst)?;
            if json {
                emit(out, &BinpackOutput { feasible: bins.is_some(), bins })?;
            } else {
                writeln!(out, "{}", if bins.is_some() { "YES" } else { "NO" })?;
            }
            Ok(EXIT_OK)
        }
    }
}
