//! Drives the benchmark harness from a key-value config and prints CSV and
//! JSON reports.
//!
//! ```bash
//! cargo run --release --example bench_config
//! ```

use pst_apsp::bench::{render_report, run_benchmark, BenchConfig, ReportFormat};

const CONFIG: &str = "\
# dense scale-free, checked against the oracles
family = scale-free-dense
sizes = 64, 256
repetitions = 3
seed = 11
verify = true
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = BenchConfig::parse_kv(CONFIG)?;
    let rows = run_benchmark(&cfg)?;
    print!("{}", render_report(&rows, ReportFormat::Csv)?);
    print!("{}", render_report(&rows[..2], ReportFormat::Json)?);
    Ok(())
}
