//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (exactly m lines, 0 <= u < v < n)
//! ```
//!
//! Whitespace-separated fields, LF line endings, no comments. `save` writes
//! edges sorted by `(u, v)`; `load` inserts them in file order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

fn two_fields(line_no: usize, line: &str) -> Result<(u64, u64), IoError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<u64, IoError> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<u64>()
            .map_err(|_| parse_err(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (n, m) = two_fields(1, header)?;

    let mut edges = Vec::with_capacity(m.min(1 << 24) as usize);
    let mut last_line = 1;
    let mut blank = None;
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            blank.get_or_insert(line_no);
            continue;
        }
        if let Some(b) = blank {
            return Err(parse_err(b, "blank line inside edge list"));
        }
        last_line = line_no;
        let (u, v) = two_fields(line_no, line)?;
        if edges.len() as u64 == m {
            return Err(parse_err(line_no, format!("more than {m} edge lines")));
        }
        if u > v {
            return Err(parse_err(line_no, format!("expected u < v, got {u} {v}")));
        }
        edges.push((u, v));
    }
    if (edges.len() as u64) < m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    let n = usize::try_from(n).map_err(|_| parse_err(1, "vertex count too large"))?;
    Ok(Graph::from_edges(n, edges)?)
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph, IoError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.sorted_edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn save_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<(), IoError> {
    fs::write(path, format_edge_list(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, gen_hypercube};

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, build_graph(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn out_of_range_id() {
        let err = parse_edge_list("2 1\n0 5\n").unwrap_err();
        assert!(matches!(
            err,
            IoError::Graph(GraphError::IdOutOfRange { id: 5, n: 2 })
        ));
    }

    #[test]
    fn duplicate_edge() {
        let err = parse_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(
            err,
            IoError::Graph(GraphError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn reports_line_numbers() {
        match parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err() {
            IoError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
        match parse_edge_list("3 1\n0 1\n1 2\n").unwrap_err() {
            IoError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
        match parse_edge_list("3 2\n0 1\n").unwrap_err() {
            IoError::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("unexpected {e}"),
        }
        assert!(matches!(
            parse_edge_list("3 1\n2 1\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n\n1 2\n"),
            Err(IoError::Parse { .. })
        ));
    }

    #[test]
    fn q2_text() {
        let text = format_edge_list(&gen_hypercube(2).unwrap());
        assert_eq!(text, "4 4\n0 1\n0 2\n1 3\n2 3\n");
    }
}
