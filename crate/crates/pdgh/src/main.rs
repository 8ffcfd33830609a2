//! Command line front end.
//!
//! Reads graphs in the `ribbon v1` file format and computes partial-dual
//! genus polynomials, the bigraded cohomology refining them, partial
//! duals, gluings, and a verification suite. `--json` switches every
//! subcommand to the machine-readable output of [`pdgh::json`].
//!
//! Exit codes: 0 on success (for `verify`: all checks passed), 1 when a
//! verification fails, 2 on usage, parse, or cap errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use pdgh::format::{parse_ribbon, serialize, ParseError};
use pdgh::json;
use pdgh_core::homology::{
    block_homology, build_complex_with_cap, check_theorem_with_cap, reorder_invariant_with_cap,
    BigradedGroups, Complex, HOMOLOGY_EDGE_CAP,
};
use pdgh_core::polynomial::{self, CapExceeded, Mode};
use pdgh_core::ribbon::{
    bar_amalgamation, disjoint_union, ribbon_join, EdgeSet, OpError, RibbonGraph,
};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "pdgh",
    version,
    about = "Partial-dual genus polynomials of ribbon graphs, and the cohomology behind them"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partial-dual Euler genus polynomial of a graph.
    Poly {
        file: PathBuf,
        /// Keep the grading by subset size instead of setting w = 1.
        #[arg(long)]
        graded: bool,
        /// Route for each dual's genus: face counts, or explicit duals.
        #[arg(long, value_enum, default_value_t = ModeArg::Faces)]
        mode: ModeArg,
        /// Refuse graphs with more edges than this.
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Bigraded cohomology groups, one line per nonzero (i, j, k).
    Homology {
        file: PathBuf,
        /// Refuse graphs with more edges than this [default: 6].
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Graded Euler characteristic in (p, q).
    Euler {
        file: PathBuf,
        /// Count cochain dimensions, or ranks of the cohomology groups.
        #[arg(long, value_enum, default_value_t = LevelArg::Cochain)]
        level: LevelArg,
        /// Refuse graphs with more edges than this [default: 6].
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Partial dual with respect to a set of edges.
    Dual {
        file: PathBuf,
        /// Comma-separated edge names; every edge when omitted.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// Vertex, edge, face and component counts, genus, orientability.
    Info { file: PathBuf },
    /// Glue two graphs into one.
    #[command(subcommand)]
    Op(OpCommand),
    /// Check the structural identities on a graph; exit 0 iff all hold.
    Verify {
        file: PathBuf,
        /// Refuse graphs with more edges than this [default: 6].
        #[arg(long)]
        max_edges: Option<usize>,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Disjoint union.
    Union { file1: PathBuf, file2: PathBuf },
    /// Merge a vertex of each graph into one vertex disk.
    Join {
        file1: PathBuf,
        file2: PathBuf,
        #[command(flatten)]
        at: Placement,
    },
    /// Connect the graphs by one new edge.
    Bar {
        file1: PathBuf,
        file2: PathBuf,
        #[command(flatten)]
        at: Placement,
        /// Attach the new edge with a half-turn.
        #[arg(long)]
        twisted: bool,
    },
}

/// Where to attach: vertex index and rotation gap on each side. Gap p of
/// a degree-d vertex is the spot before rotation position p, so 0..=d all
/// name a gap (0 and d coincide).
#[derive(clap::Args)]
struct Placement {
    #[arg(long, default_value_t = 0)]
    v1: usize,
    #[arg(long, default_value_t = 0)]
    pos1: usize,
    #[arg(long, default_value_t = 0)]
    v2: usize,
    #[arg(long, default_value_t = 0)]
    pos2: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Faces,
    Duals,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Faces => Mode::Faces,
            ModeArg::Duals => Mode::Duals,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Cochain,
    Homology,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {err}")]
    Read { path: String, err: std::io::Error },
    #[error("{path}: {err}")]
    Parse { path: String, err: ParseError },
    #[error("{0}")]
    Cap(#[from] CapExceeded),
    #[error("{0}")]
    Op(#[from] OpError),
    #[error("no edge named `{0}`")]
    UnknownEdge(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Poly { file, graded, mode, max_edges } => {
            let g = load(file)?;
            let mode = Mode::from(*mode);
            let cap = max_edges.unwrap_or(mode.default_cap());
            if *graded {
                let p = polynomial::graded_pd_genus_polynomial_with_cap(&g, mode, cap)?;
                emit(cli, &p.to_string(), || json::bilaurent_value(&p));
            } else {
                let p = polynomial::pd_genus_polynomial_with_cap(&g, mode, cap)?;
                emit(cli, &p.to_string(), || json::laurent_value(&p));
            }
        }
        Command::Homology { file, max_edges } => {
            let g = load(file)?;
            let h = homology(&g, *max_edges)?;
            if cli.json {
                println!("{}", json::groups_value(&h));
            } else {
                // Tables can be long; stop quietly if the reader hangs up.
                let mut out = std::io::stdout().lock();
                for ((i, j, k), entry) in h.iter() {
                    let torsion: Vec<String> = entry.torsion.iter().map(|t| t.name()).collect();
                    let line = format!(
                        "({i}, {j}, {k}) free={} torsion=[{}]",
                        entry.free,
                        torsion.join(", ")
                    );
                    if writeln!(out, "{line}").is_err() {
                        break;
                    }
                }
            }
        }
        Command::Euler { file, level, max_edges } => {
            let g = load(file)?;
            let chi = match level {
                LevelArg::Cochain => complex(&g, *max_edges)?.euler_characteristic(),
                LevelArg::Homology => homology(&g, *max_edges)?.euler_characteristic(),
            };
            emit(cli, &chi.to_string(), || json::bilaurent_value(&chi));
        }
        Command::Dual { file, edges } => {
            let g = load(file)?;
            let set = match edges {
                None => g.full_edge_set(),
                Some(names) => {
                    let mut set = EdgeSet::from_bits(0);
                    for name in names {
                        let e = g
                            .edge_index(name)
                            .ok_or_else(|| CliError::UnknownEdge(name.clone()))?;
                        set = set.with(e);
                    }
                    set
                }
            };
            let dual = g.partial_dual(set);
            emit_graph(cli, &dual);
        }
        Command::Info { file } => {
            let g = load(file)?;
            let c = g.counts();
            let orientable = g.is_orientable();
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "vertices": c.vertices,
                        "edges": c.edges,
                        "faces": c.faces,
                        "components": c.components,
                        "genus": g.euler_genus(),
                        "orientable": orientable,
                    })
                );
            } else {
                println!(
                    "V={} E={} F={} c={} genus={} orientable={}",
                    c.vertices,
                    c.edges,
                    c.faces,
                    c.components,
                    g.euler_genus(),
                    if orientable { "yes" } else { "no" }
                );
            }
        }
        Command::Op(op) => {
            let glued = match op {
                OpCommand::Union { file1, file2 } => disjoint_union(&load(file1)?, &load(file2)?),
                OpCommand::Join { file1, file2, at } => {
                    ribbon_join(&load(file1)?, at.v1, at.pos1, &load(file2)?, at.v2, at.pos2)?
                }
                OpCommand::Bar { file1, file2, at, twisted } => bar_amalgamation(
                    &load(file1)?,
                    at.v1,
                    at.pos1,
                    &load(file2)?,
                    at.v2,
                    at.pos2,
                    *twisted,
                )?,
            };
            emit_graph(cli, &glued);
        }
        Command::Verify { file, max_edges } => {
            let g = load(file)?;
            let cap = max_edges.unwrap_or(HOMOLOGY_EDGE_CAP);
            let theorem = check_theorem_with_cap(&g, cap)?;
            let checks = [
                ("differential squares to zero", theorem.differential_squares_to_zero),
                ("cochain and cohomology euler characteristics agree", theorem.euler_levels_agree),
                (
                    "euler characteristic substitutes to the graded polynomial",
                    theorem.substitution_matches,
                ),
                (
                    "graded polynomial recovered from the euler characteristic",
                    theorem.expansion_recovers,
                ),
                ("cohomology independent of edge order", reorder_invariant_with_cap(&g, cap)?),
                (
                    "partial duals share the genus polynomial",
                    polynomial::partial_duals_agree(&g, cap)?,
                ),
            ];
            if cli.json {
                let list: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|(name, ok)| serde_json::json!({ "name": name, "ok": ok }))
                    .collect();
                println!("{}", serde_json::json!({ "checks": list }));
            } else {
                for (name, ok) in &checks {
                    println!("{name}: {}", if *ok { "ok" } else { "FAILED" });
                }
            }
            return Ok(checks.iter().all(|(_, ok)| *ok));
        }
    }
    Ok(true)
}

fn load(path: &Path) -> Result<RibbonGraph, CliError> {
    let shown = path.display().to_string();
    let text =
        std::fs::read_to_string(path).map_err(|err| CliError::Read { path: shown.clone(), err })?;
    parse_ribbon(&text).map_err(|err| CliError::Parse { path: shown, err })
}

fn complex(g: &RibbonGraph, max_edges: Option<usize>) -> Result<Complex, CapExceeded> {
    build_complex_with_cap(g, max_edges.unwrap_or(HOMOLOGY_EDGE_CAP))
}

fn homology(g: &RibbonGraph, max_edges: Option<usize>) -> Result<BigradedGroups, CapExceeded> {
    Ok(homology_parallel(&complex(g, max_edges)?, worker_count()))
}

/// Fan the (j, k) blocks of the complex out to a bounded worker pool.
/// The output is keyed by the grading, not by completion order, so every
/// worker count produces identical results.
fn homology_parallel(c: &Complex, workers: usize) -> BigradedGroups {
    let blocks: Vec<_> = c.blocks().iter().collect();
    let mut results: Vec<((i64, i64), Vec<_>)> = Vec::new();
    if workers <= 1 || blocks.len() <= 1 {
        results.extend(blocks.iter().map(|(jk, b)| (**jk, block_homology(b))));
    } else {
        let next = AtomicUsize::new(0);
        let collected = Mutex::new(Vec::new());
        std::thread::scope(|s| {
            for _ in 0..workers.min(blocks.len()) {
                s.spawn(|| loop {
                    let t = next.fetch_add(1, Ordering::Relaxed);
                    let Some((jk, block)) = blocks.get(t) else { break };
                    let h = block_homology(block);
                    collected.lock().unwrap().push((**jk, h));
                });
            }
        });
        results = collected.into_inner().unwrap();
    }
    let entries = results
        .into_iter()
        .flat_map(|((j, k), v)| v.into_iter().map(move |(i, entry)| ((i, j, k), entry)));
    BigradedGroups::from_entries(c.edge_count(), entries)
}

/// Worker bound from PDGH_THREADS; unset, unparseable or 0 means one
/// worker per available CPU.
fn worker_count() -> usize {
    match std::env::var("PDGH_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        Some(n) if n > 0 => n,
        _ => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    }
}

fn emit(cli: &Cli, text: &str, value: impl FnOnce() -> serde_json::Value) {
    if cli.json {
        println!("{}", value());
    } else {
        println!("{text}");
    }
}

fn emit_graph(cli: &Cli, g: &RibbonGraph) {
    if cli.json {
        println!("{}", json::graph_value(g));
    } else {
        print!("{}", serialize(g));
    }
}
