//! Command-line front end: `generate`, `run`, `verify`, `bench`.
//!
//! Exit codes: 0 on success, 1 when verification or a benchmark fails, 2
//! for usage, parse and I/O errors. Relative output paths are resolved
//! against `$PST_APSP_OUT_DIR` when it is set.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{
    emit_report, run_benchmark, Algorithm, BenchConfig, BenchError, Family, ReportFormat,
};
use crate::bfs::bfs_apsp;
use crate::graph::{format_edge_list, load_edge_list, save_edge_list, GenSpec, Graph};
use crate::oracle::{first_divergence, floyd_warshall, verify_parents};
use crate::pst::pst_apsp;
use crate::stats::ApspOutput;

pub const OUT_DIR_ENV: &str = "PST_APSP_OUT_DIR";

/// Largest `n` for which `run` writes matrix CSVs without `--force`.
pub const MATRIX_CSV_LIMIT: usize = 1024;

#[derive(Debug, Parser)]
#[command(
    name = "pst-apsp",
    version,
    about = "Unweighted all-pairs shortest paths: PST vs BFS"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Hypercube,
    ScaleFree,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AlgoArg {
    Pst,
    Bfs,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Pst => Algorithm::Pst,
            AlgoArg::Bfs => Algorithm::Bfs,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Hypercube,
    ScaleFreeSparse,
    ScaleFreeDense,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Hypercube => Family::Hypercube,
            FamilyArg::ScaleFreeSparse => Family::ScaleFreeSparse,
            FamilyArg::ScaleFreeDense => Family::ScaleFreeDense,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    MarkdownTable,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
            FormatArg::MarkdownTable => ReportFormat::MarkdownTable,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as an edge list.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Seed clique size for scale-free graphs.
        #[arg(long, default_value_t = 2)]
        n_prime: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one algorithm on an edge-list file and print its counters.
    Run {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        graph: PathBuf,
        /// Distance matrix CSV (`inf` = unreachable).
        #[arg(long)]
        out_dist: Option<PathBuf>,
        /// Parent matrix CSV (`-` = root, `?` = unreachable).
        #[arg(long)]
        out_parents: Option<PathBuf>,
        /// Allow matrix CSVs above n = 1024.
        #[arg(long)]
        force: bool,
    },
    /// Cross-check PST, BFS and Floyd-Warshall on one graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Largest n accepted (Floyd-Warshall is cubic).
        #[arg(long, default_value_t = 2048)]
        max_n: usize,
    },
    /// Run the benchmark grid and emit a report.
    Bench {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, value_enum, value_delimiter = ',')]
        algorithms: Vec<AlgoArg>,
        #[arg(long)]
        repetitions: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        verify: bool,
        /// Key-value config file; flags given on the command line override it.
        #[arg(long)]
        config: Option<PathBuf>,
        /// All three families at n = 64, 256, 1024, 4096.
        #[arg(long)]
        full_grid: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn out_path(p: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    load_edge_list(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Check(msg) => eprintln!("{msg}"),
            }
            f.code()
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate {
            kind,
            n,
            n_prime,
            seed,
            out,
        } => cmd_generate(kind, n, n_prime, seed, out),
        Command::Run {
            algo,
            graph,
            out_dist,
            out_parents,
            force,
        } => cmd_run(algo.into(), &graph, out_dist, out_parents, force),
        Command::Verify { graph, max_n } => cmd_verify(&graph, max_n),
        Command::Bench {
            family,
            sizes,
            algorithms,
            repetitions,
            seed,
            verify,
            config,
            full_grid,
            format,
            out,
        } => {
            let configs = if full_grid {
                let mut grid = BenchConfig::full_grid(seed.unwrap_or(0));
                for cfg in &mut grid {
                    cfg.verify = verify;
                    if let Some(r) = repetitions {
                        cfg.repetitions = r;
                    }
                }
                grid
            } else {
                let mut cfg = match &config {
                    Some(path) => BenchConfig::load(path)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                    None => {
                        let family = family.ok_or_else(|| {
                            usage("--family, --config or --paper-grid is required")
                        })?;
                        BenchConfig::new(family.into(), Vec::new())
                    }
                };
                if let Some(f) = family {
                    cfg.family = f.into();
                }
                if !sizes.is_empty() {
                    cfg.sizes = sizes;
                }
                if !algorithms.is_empty() {
                    cfg.algorithms = algorithms.into_iter().map(Algorithm::from).collect();
                }
                if let Some(r) = repetitions {
                    cfg.repetitions = r;
                }
                if let Some(s) = seed {
                    cfg.seed = s;
                }
                cfg.verify |= verify;
                vec![cfg]
            };
            cmd_bench(&configs, format.into(), out)
        }
    }
}

fn cmd_generate(
    kind: KindArg,
    n: usize,
    n_prime: usize,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let spec = match kind {
        KindArg::Hypercube => GenSpec::hypercube(n),
        KindArg::ScaleFree => GenSpec::scale_free(n, n_prime, seed),
    };
    let g = spec.generate().map_err(usage)?;
    let deg = g.degree_summary();
    let summary = format!(
        "n = {}, m = {}, degree min/avg/max = {}/{:.2}/{}",
        g.vertex_count(),
        g.edge_count(),
        deg.min,
        deg.avg,
        deg.max
    );
    match out {
        Some(path) => {
            let path = out_path(&path);
            save_edge_list(&g, &path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("wrote {}: {summary}", path.display());
        }
        None => {
            print!("{}", format_edge_list(&g));
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn write_matrix(
    path: &Path,
    write: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> Result<(), Failure> {
    let path = out_path(path);
    let io = |e: std::io::Error| usage(format!("{}: {e}", path.display()));
    let mut w = BufWriter::new(File::create(&path).map_err(io)?);
    write(&mut w).and_then(|_| w.flush()).map_err(io)
}

fn cmd_run(
    algo: Algorithm,
    graph: &Path,
    out_dist: Option<PathBuf>,
    out_parents: Option<PathBuf>,
    force: bool,
) -> Result<(), Failure> {
    let g = load(graph)?;
    let n = g.vertex_count();
    if (out_dist.is_some() || out_parents.is_some()) && n > MATRIX_CSV_LIMIT && !force {
        return Err(usage(format!(
            "matrix CSV for n = {n} exceeds {MATRIX_CSV_LIMIT}; pass --force to write it anyway"
        )));
    }
    let out = algo.run(&g).map_err(|e| Failure::Check(e.to_string()))?;
    println!("algorithm: {algo}");
    println!("n: {n}");
    println!("m: {}", g.edge_count());
    println!("accesses: {}", out.stats.accesses);
    println!("alpha: {}", out.stats.alpha());
    println!("time_init_s: {:.6}", out.timings.init.as_secs_f64());
    println!("time_main_s: {:.6}", out.timings.main.as_secs_f64());
    if let Some(p) = out_dist {
        write_matrix(&p, |w| out.distances.write_csv(w))?;
    }
    if let Some(p) = out_parents {
        write_matrix(&p, |w| out.parents.write_csv(w))?;
    }
    Ok(())
}

/// Pairwise distance equality and tree validity of both parent matrices.
fn cross_check(g: &Graph, pst: &ApspOutput, bfs: &ApspOutput) -> Result<(), String> {
    let fw = floyd_warshall(g);
    for (name, out) in [("bfs", bfs), ("pst", pst)] {
        if let Some(div) = first_divergence(&fw, &out.distances) {
            return Err(format!("{name} vs floyd-warshall: {div}"));
        }
    }
    if let Some(div) = first_divergence(&bfs.distances, &pst.distances) {
        return Err(format!("pst vs bfs: {div}"));
    }
    for (name, out) in [("bfs", bfs), ("pst", pst)] {
        let violations =
            verify_parents(g, &out.distances, &out.parents).map_err(|e| e.to_string())?;
        if let Some(v) = violations.first() {
            return Err(format!(
                "{name} parents: {} violations, first {v}",
                violations.len()
            ));
        }
    }
    Ok(())
}

fn cmd_verify(graph: &Path, max_n: usize) -> Result<(), Failure> {
    let g = load(graph)?;
    let n = g.vertex_count();
    if n > max_n {
        return Err(usage(format!(
            "n = {n} exceeds the oracle limit {max_n} (see --max-n)"
        )));
    }
    let pst = pst_apsp(&g).map_err(|e| Failure::Check(format!("FAIL: {e}")))?;
    let bfs = bfs_apsp(&g);
    match cross_check(&g, &pst, &bfs) {
        Ok(()) => {
            println!("PASS (n = {n}, m = {})", g.edge_count());
            Ok(())
        }
        Err(msg) => {
            println!("FAIL: {msg}");
            Err(Failure::Check(format!("FAIL: {msg}")))
        }
    }
}

fn cmd_bench(
    configs: &[BenchConfig],
    format: ReportFormat,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let mut rows = Vec::new();
    for cfg in configs {
        let cell = run_benchmark(cfg).map_err(|e| match e {
            BenchError::InvalidConfig(_) | BenchError::Graph(_) => usage(e),
            _ => Failure::Check(e.to_string()),
        })?;
        rows.extend(cell);
    }
    let path = out.map(|p| out_path(&p));
    emit_report(&rows, format, path.as_deref()).map_err(usage)
}
