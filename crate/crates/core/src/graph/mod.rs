//! Immutable undirected unweighted graphs with contiguous adjacency storage.
//!
//! Vertices are dense `u32` ids in `[0, n)`. Each vertex's neighbor sequence
//! keeps insertion order, and every algorithm in this crate uses that order
//! to break ties, so two graphs with the same edge set but different
//! neighbor order may yield different (equally valid) shortest path trees.

mod generate;
mod io;

use std::collections::HashSet;

use thiserror::Error;

pub use generate::{gen_hypercube, gen_scale_free, GenSpec, GraphKind};
pub use io::{format_edge_list, load_edge_list, parse_edge_list, save_edge_list, IoError};

/// Vertex identifier.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {id} out of range for n = {n}")]
    IdOutOfRange { id: u64, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex count {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// Largest supported vertex count. Tree-vertex handles and matrix offsets
/// are `u32`, so `n * n` must stay below `u32::MAX`.
pub const MAX_VERTICES: usize = 65_535;

/// An undirected unweighted graph in compressed sparse row form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<u32>,
    targets: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph from an edge list. Each vertex's neighbors appear in
    /// the order its edges occur in `edges`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut pairs = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n as u64 {
                    return Err(GraphError::IdOutOfRange { id, n });
                }
            }
            let (u, v) = (u as VertexId, v as VertexId);
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            pairs.push((u, v));
        }

        let mut degree = vec![0u32; n];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u32);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor: Vec<u32> = offsets[..n].to_vec();
        let mut targets = vec![0; pairs.len() * 2];
        for &(u, v) in &pairs {
            targets[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        Ok(Graph { offsets, targets })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).contains(&b)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count() as VertexId
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn sorted_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges: Vec<_> = self
            .vertices()
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Average degree `2m / n`.
    pub fn average_degree(&self) -> f64 {
        self.targets.len() as f64 / self.vertex_count() as f64
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let mut min = usize::MAX;
        let mut max = 0;
        for v in self.vertices() {
            let d = self.degree(v);
            min = min.min(d);
            max = max.max(d);
        }
        DegreeSummary {
            min,
            max,
            avg: self.average_degree(),
        }
    }

    /// Checks the structural invariants: symmetry, no self-loops, no
    /// duplicate neighbors, and degree sum equal to `2m`.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.vertex_count();
        let mut degree_sum = 0;
        for u in self.vertices() {
            let nbrs = self.neighbors(u);
            degree_sum += nbrs.len();
            let mut seen = HashSet::with_capacity(nbrs.len());
            for &v in nbrs {
                if v as usize >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop on {u}"));
                }
                if !seen.insert(v) {
                    return Err(format!("duplicate neighbor {v} of {u}"));
                }
                if !self.neighbors(v).contains(&u) {
                    return Err(format!("edge ({u}, {v}) is not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.edge_count() {
            return Err(format!(
                "degree sum {degree_sum} != 2m = {}",
                2 * self.edge_count()
            ));
        }
        Ok(())
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub avg: f64,
}

/// Builds a graph on `n` vertices from `(u, v)` id pairs.
pub fn build_graph(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (u as u64, v as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.validate().is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            build_graph(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert!(matches!(
            build_graph(2, &[(0, 2)]),
            Err(GraphError::IdOutOfRange { id: 2, n: 2 })
        ));
        assert_eq!(build_graph(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(build_graph(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn insertion_order_is_kept() {
        let g = build_graph(4, &[(2, 0), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[2, 3, 1]);
        assert_eq!(g.sorted_edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn connectivity() {
        assert!(build_graph(1, &[]).unwrap().is_connected());
        assert!(!build_graph(2, &[]).unwrap().is_connected());
    }
}
