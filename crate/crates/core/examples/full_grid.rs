//! Runs the three benchmark graph families at n = 64 … 4096 and prints
//! CPU-time and α tables.
//!
//! ```bash
//! cargo run --release --example full_grid [seed]
//! ```

use pst_apsp::bench::{render_report, run_benchmark, BenchConfig, ReportFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1);
    let mut rows = Vec::new();
    for cfg in BenchConfig::full_grid(seed) {
        eprintln!("running {} ...", cfg.family);
        rows.extend(run_benchmark(&cfg)?);
    }
    print!("{}", render_report(&rows, ReportFormat::MarkdownTable)?);
    Ok(())
}
