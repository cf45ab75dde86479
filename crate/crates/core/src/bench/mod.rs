//! Benchmark harness: algorithm × graph family × size.
//!
//! Each `(family, n)` cell generates one graph and runs every selected
//! algorithm on that same instance. Access counts are deterministic and are
//! checked to be identical across repetitions. Wall times are reported as
//! medians.

mod config;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use thiserror::Error;

pub use config::ConfigError;
pub use report::{emit_report, render_report, ReportError, ReportFormat};

use crate::bfs::bfs_apsp;
use crate::graph::{gen_hypercube, gen_scale_free, Graph, GraphError};
use crate::oracle::{first_divergence, floyd_warshall, verify_parents};
use crate::pst::{pst_apsp, PstError};
use crate::stats::{round_ratio, Alpha, ApspOutput};

/// Graph sizes of the published experiment grid.
pub const GRID_SIZES: [usize; 4] = [64, 256, 1024, 4096];

/// Largest `n` for which verification also runs Floyd-Warshall.
pub const ORACLE_CUTOFF: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercube,
    /// Preferential attachment with `n′ = 2`.
    ScaleFreeSparse,
    /// Preferential attachment with `n′ = round(√n)`.
    ScaleFreeDense,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::Hypercube,
        Family::ScaleFreeSparse,
        Family::ScaleFreeDense,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::ScaleFreeSparse => "scale-free-sparse",
            Family::ScaleFreeDense => "scale-free-dense",
        }
    }

    pub fn n_prime(self, n: usize) -> Option<usize> {
        match self {
            Family::Hypercube => None,
            Family::ScaleFreeSparse => Some(2),
            Family::ScaleFreeDense => Some((n as f64).sqrt().round() as usize),
        }
    }

    pub fn generate(self, n: usize, seed: u64) -> Result<Graph, GraphError> {
        match self.n_prime(n) {
            None => {
                if !n.is_power_of_two() || n < 2 {
                    return Err(GraphError::InvalidParams(format!(
                        "hypercube size {n} is not a power of two >= 2"
                    )));
                }
                gen_hypercube(n.trailing_zeros())
            }
            Some(n_prime) => gen_scale_free(n, n_prime, seed),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Pst,
    Bfs,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Pst => "pst",
            Algorithm::Bfs => "bfs",
        }
    }

    pub fn run(self, g: &Graph) -> Result<ApspOutput, PstError> {
        match self {
            Algorithm::Pst => pst_apsp(g),
            Algorithm::Bfs => Ok(bfs_apsp(g)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pst" => Ok(Algorithm::Pst),
            "bfs" => Ok(Algorithm::Bfs),
            _ => Err(format!("unknown algorithm {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub repetitions: usize,
    /// Scale-free RNG seed; unused for hypercubes.
    pub seed: u64,
    pub verify: bool,
}

impl BenchConfig {
    pub fn new(family: Family, sizes: Vec<usize>) -> Self {
        BenchConfig {
            family,
            sizes,
            algorithms: vec![Algorithm::Pst, Algorithm::Bfs],
            repetitions: 1,
            seed: 0,
            verify: false,
        }
    }

    /// The three published families at n = 64 … 4096, both algorithms.
    pub fn full_grid(seed: u64) -> Vec<BenchConfig> {
        Family::ALL
            .into_iter()
            .map(|f| BenchConfig {
                seed,
                ..BenchConfig::new(f, GRID_SIZES.to_vec())
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let bad = |msg: &str| Err(BenchError::InvalidConfig(msg.to_string()));
        if self.sizes.is_empty() {
            return bad("sizes must not be empty");
        }
        if self.repetitions == 0 {
            return bad("repetitions must be at least 1");
        }
        if self.algorithms.is_empty() {
            return bad("at least one algorithm is required");
        }
        Ok(())
    }
}

/// `numerator / denominator` of two access counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    pub fn new(numerator: u64, denominator: u64) -> Option<Ratio> {
        (denominator > 0).then_some(Ratio {
            numerator,
            denominator,
        })
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn hundredths(&self) -> u128 {
        round_ratio(self.numerator as u128 * 100, self.denominator as u128)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::stats::fmt_hundredths(self.hundredths(), f)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub n_prime: Option<usize>,
    pub algorithm: Algorithm,
    pub time_main: Duration,
    pub time_init: Duration,
    pub accesses: u64,
    pub alpha: Alpha,
    /// On BFS rows, BFS accesses over PST accesses on the same graph.
    pub ratio: Option<Ratio>,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pst(#[from] PstError),
    #[error("verification failed for {family} n = {n}: {detail}")]
    VerificationFailed {
        family: Family,
        n: usize,
        detail: String,
    },
    #[error("{algorithm} access count changed between repetitions on {family} n = {n}: {first} vs {other}")]
    NonDeterministic {
        family: Family,
        n: usize,
        algorithm: Algorithm,
        first: u64,
        other: u64,
    },
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort_unstable();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2
    }
}

/// Runs every configured cell and returns one row per `(n, algorithm)`,
/// PST before BFS.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    cfg.validate()?;
    let mut algorithms = cfg.algorithms.clone();
    algorithms.sort_unstable();
    algorithms.dedup();

    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        let g = cfg.family.generate(n, cfg.seed)?;
        let mut cell: Vec<(BenchRow, ApspOutput)> = Vec::new();
        for &algorithm in &algorithms {
            let mut last = algorithm.run(&g)?;
            let mut mains = vec![last.timings.main];
            let mut inits = vec![last.timings.init];
            for _ in 1..cfg.repetitions {
                let again = algorithm.run(&g)?;
                if again.stats.accesses != last.stats.accesses {
                    return Err(BenchError::NonDeterministic {
                        family: cfg.family,
                        n,
                        algorithm,
                        first: last.stats.accesses,
                        other: again.stats.accesses,
                    });
                }
                mains.push(again.timings.main);
                inits.push(again.timings.init);
                last = again;
            }
            let row = BenchRow {
                family: cfg.family,
                n,
                n_prime: cfg.family.n_prime(n),
                algorithm,
                time_main: median(mains),
                time_init: median(inits),
                accesses: last.stats.accesses,
                alpha: last.stats.alpha(),
                ratio: None,
            };
            cell.push((row, last));
        }

        if cfg.verify {
            verify_cell(cfg.family, &g, &cell)?;
        }

        let pst_accesses = cell
            .iter()
            .find(|(r, _)| r.algorithm == Algorithm::Pst)
            .map(|(r, _)| r.accesses);
        for (mut row, _) in cell {
            if let (Algorithm::Bfs, Some(p)) = (row.algorithm, pst_accesses) {
                row.ratio = Ratio::new(row.accesses, p);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Checks PST against BFS at any size, both parent matrices against the
/// tree rules, and both against Floyd-Warshall up to [`ORACLE_CUTOFF`].
/// An algorithm missing from the cell is run here for the comparison.
fn verify_cell(
    family: Family,
    g: &Graph,
    cell: &[(BenchRow, ApspOutput)],
) -> Result<(), BenchError> {
    let n = g.vertex_count();
    let fail = |detail: String| BenchError::VerificationFailed { family, n, detail };
    let find = |a: Algorithm| cell.iter().find(|(r, _)| r.algorithm == a).map(|(_, o)| o);

    let extra_pst;
    let pst = match find(Algorithm::Pst) {
        Some(o) => o,
        None => {
            extra_pst = pst_apsp(g)?;
            &extra_pst
        }
    };
    let extra_bfs;
    let bfs = match find(Algorithm::Bfs) {
        Some(o) => o,
        None => {
            extra_bfs = bfs_apsp(g);
            &extra_bfs
        }
    };

    if let Some(div) = first_divergence(&bfs.distances, &pst.distances) {
        return Err(fail(format!("pst vs bfs distances: {div}")));
    }
    for (name, out) in [("pst", pst), ("bfs", bfs)] {
        let violations =
            verify_parents(g, &out.distances, &out.parents).map_err(|e| fail(e.to_string()))?;
        if let Some(v) = violations.first() {
            return Err(fail(format!(
                "{name} parents: {} violations, first {v}",
                violations.len()
            )));
        }
    }
    if n <= ORACLE_CUTOFF {
        let fw = floyd_warshall(g);
        if let Some(div) = first_divergence(&fw, &pst.distances) {
            return Err(fail(format!("pst vs floyd-warshall: {div}")));
        }
    }
    Ok(())
}
