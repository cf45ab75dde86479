//! CSV, JSON and markdown renderings of benchmark rows.
//!
//! Column order everywhere: family, n, n_prime, algorithm, time_main_s,
//! time_init_s, accesses, alpha, ratio. α and ratio carry two decimals.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use super::{Algorithm, BenchRow, Family, Ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    MarkdownTable,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "markdown-table" | "markdown" | "md" => Ok(ReportFormat::MarkdownTable),
            _ => Err(format!("unknown report format {s:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("no rows to report")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const CSV_HEADER: &str =
    "family,n,n_prime,algorithm,time_main_s,time_init_s,accesses,alpha,ratio";

fn secs(d: Duration) -> String {
    format!("{:.6}", d.as_secs_f64())
}

fn hundredths_f64(h: u128) -> f64 {
    h as f64 / 100.0
}

#[derive(Serialize)]
struct JsonRow<'a> {
    family: &'a str,
    n: usize,
    n_prime: Option<usize>,
    algorithm: &'a str,
    time_main_s: f64,
    time_init_s: f64,
    accesses: u64,
    alpha: f64,
    ratio: Option<f64>,
}

pub fn render_report(rows: &[BenchRow], format: ReportFormat) -> Result<String, ReportError> {
    if rows.is_empty() {
        return Err(ReportError::Empty);
    }
    Ok(match format {
        ReportFormat::Csv => render_csv(rows),
        ReportFormat::Json => render_json(rows),
        ReportFormat::MarkdownTable => render_markdown(rows),
    })
}

/// Writes the report to `path`, or to stdout when `path` is `None`. No
/// file is created for an empty row set.
pub fn emit_report(
    rows: &[BenchRow],
    format: ReportFormat,
    path: Option<&Path>,
) -> Result<(), ReportError> {
    let text = render_report(rows, format)?;
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.family,
            r.n,
            r.n_prime.map(|p| p.to_string()).unwrap_or_default(),
            r.algorithm,
            secs(r.time_main),
            secs(r.time_init),
            r.accesses,
            r.alpha,
            r.ratio.map(|x| x.to_string()).unwrap_or_default(),
        );
    }
    out
}

fn render_json(rows: &[BenchRow]) -> String {
    let json: Vec<_> = rows
        .iter()
        .map(|r| JsonRow {
            family: r.family.name(),
            n: r.n,
            n_prime: r.n_prime,
            algorithm: r.algorithm.name(),
            time_main_s: r.time_main.as_secs_f64(),
            time_init_s: r.time_init.as_secs_f64(),
            accesses: r.accesses,
            alpha: hundredths_f64(r.alpha.hundredths()),
            ratio: r.ratio.map(|x| hundredths_f64(x.hundredths())),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&json).expect("rows serialize");
    out.push('\n');
    out
}

/// Two tables per family, CPU time then α, each with PST and BFS columns
/// side by side and a BFS/PST ratio column when both ran.
fn render_markdown(rows: &[BenchRow]) -> String {
    let mut families: Vec<Family> = Vec::new();
    for r in rows {
        if !families.contains(&r.family) {
            families.push(r.family);
        }
    }
    let mut out = String::new();
    for family in families {
        let frows: Vec<&BenchRow> = rows.iter().filter(|r| r.family == family).collect();
        let mut sizes: Vec<(usize, Option<usize>)> = Vec::new();
        for r in &frows {
            if !sizes.contains(&(r.n, r.n_prime)) {
                sizes.push((r.n, r.n_prime));
            }
        }
        let mut algos: Vec<Algorithm> = frows.iter().map(|r| r.algorithm).collect();
        algos.sort_unstable();
        algos.dedup();
        let both = algos.len() == 2;
        let with_np = family != Family::Hypercube;
        let get = |n: usize, a: Algorithm| frows.iter().find(|r| r.n == n && r.algorithm == a);

        for (title, unit) in [("CPU time", "time (s)"), ("alpha", "alpha")] {
            let _ = writeln!(out, "### {family}: {title}\n");
            let mut header = String::from("| n |");
            let mut rule = String::from("|---:|");
            if with_np {
                header.push_str(" n' |");
                rule.push_str("---:|");
            }
            for a in &algos {
                let _ = write!(header, " {} {unit} |", a.name().to_uppercase());
                rule.push_str("---:|");
            }
            if both {
                header.push_str(" BFS/PST |");
                rule.push_str("---:|");
            }
            let _ = writeln!(out, "{header}\n{rule}");

            for &(n, n_prime) in &sizes {
                let mut line = format!("| {n} |");
                if with_np {
                    let _ = write!(
                        line,
                        " {} |",
                        n_prime.map(|p| p.to_string()).unwrap_or_default()
                    );
                }
                for &a in &algos {
                    let cell = match (get(n, a), title) {
                        (Some(r), "CPU time") => secs(r.time_main),
                        (Some(r), _) => r.alpha.to_string(),
                        (None, _) => String::new(),
                    };
                    let _ = write!(line, " {cell} |");
                }
                if both {
                    let cell = match (get(n, Algorithm::Pst), get(n, Algorithm::Bfs)) {
                        (Some(p), Some(b)) if title == "CPU time" => {
                            let (bt, pt) = (b.time_main.as_secs_f64(), p.time_main.as_secs_f64());
                            if pt > 0.0 {
                                format!("{:.2}", bt / pt)
                            } else {
                                String::new()
                            }
                        }
                        (Some(p), Some(b)) => Ratio::new(b.accesses, p.accesses)
                            .map(|x| x.to_string())
                            .unwrap_or_default(),
                        _ => String::new(),
                    };
                    let _ = write!(line, " {cell} |");
                }
                let _ = writeln!(out, "{line}");
            }
            out.push('\n');
        }
    }
    out
}
