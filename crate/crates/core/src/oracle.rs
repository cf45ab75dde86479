//! Reference checks: Floyd-Warshall distances and a shortest path tree
//! validator for parent matrices.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::{DistanceMatrix, ParentMatrix, NOT_SEARCHED, NO_PARENT, UNREACHED};

/// Unit-weight Floyd-Warshall. `O(n³)`; meant for small graphs.
pub fn floyd_warshall(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![UNREACHED; n * n];
    for i in 0..n {
        d[i * n + i] = 0;
        for &j in g.neighbors(i as u32) {
            d[i * n + j as usize] = 1;
        }
    }
    for k in 0..n {
        let row_k = d[k * n..(k + 1) * n].to_vec();
        for i in 0..n {
            let ik = d[i * n + k];
            if ik == UNREACHED {
                continue;
            }
            let row_i = &mut d[i * n..(i + 1) * n];
            for (cell, &kj) in row_i.iter_mut().zip(&row_k) {
                if kj != UNREACHED && ik + kj < *cell {
                    *cell = ik + kj;
                }
            }
        }
    }
    let mut out = DistanceMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, d[i * n + j]);
        }
    }
    out
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("dimension mismatch: graph has {graph} vertices, distances {distances}, parents {parents}")]
pub struct DimensionMismatch {
    pub graph: usize,
    pub distances: usize,
    pub parents: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Diagonal entry is not `NO_PARENT`.
    RootHasParent(u32),
    /// Reachable vertex without a real parent id.
    MissingParent(u32),
    NotAdjacent {
        parent: u32,
    },
    /// `D[parent][source]` is not `D[vertex][source] - 1`.
    DistanceNotDecremented {
        parent: u32,
        parent_distance: u32,
        distance: u32,
    },
    /// Unreached vertex whose entry is not `NOT_SEARCHED`.
    UnreachedHasParent(u32),
}

/// One bad entry `S[vertex][source]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub source: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[{}][{}]: {:?}", self.vertex, self.source, self.kind)
    }
}

/// Lists every parent-matrix entry that does not describe a shortest path
/// tree consistent with `d`. Empty means every column is valid.
pub fn verify_parents(
    g: &Graph,
    d: &DistanceMatrix,
    s: &ParentMatrix,
) -> Result<Vec<Violation>, DimensionMismatch> {
    let n = g.vertex_count();
    if d.n() != n || s.n() != n {
        return Err(DimensionMismatch {
            graph: n,
            distances: d.n(),
            parents: s.n(),
        });
    }
    let mut out = Vec::new();
    for j in 0..n {
        let dist = d.column(j);
        let tree = s.tree(j);
        for i in 0..n {
            let p = tree[i];
            let kind = if i == j {
                (p != NO_PARENT).then_some(ViolationKind::RootHasParent(p))
            } else if dist[i] == UNREACHED {
                (p != NOT_SEARCHED).then_some(ViolationKind::UnreachedHasParent(p))
            } else if p == NO_PARENT || p == NOT_SEARCHED || p as usize >= n {
                Some(ViolationKind::MissingParent(p))
            } else if !g.has_edge(i as u32, p) {
                Some(ViolationKind::NotAdjacent { parent: p })
            } else if dist[p as usize] == UNREACHED || dist[p as usize] + 1 != dist[i] {
                Some(ViolationKind::DistanceNotDecremented {
                    parent: p,
                    parent_distance: dist[p as usize],
                    distance: dist[i],
                })
            } else {
                None
            };
            if let Some(kind) = kind {
                out.push(Violation {
                    vertex: i,
                    source: j,
                    kind,
                });
            }
        }
    }
    Ok(out)
}

/// First distance entry where `actual` disagrees with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Divergence {
    pub source: usize,
    pub vertex: usize,
    pub expected: u32,
    pub actual: u32,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: u32| {
            if d == UNREACHED {
                "inf".to_string()
            } else {
                d.to_string()
            }
        };
        write!(
            f,
            "source {} vertex {}: expected {}, got {}",
            self.source,
            self.vertex,
            show(self.expected),
            show(self.actual)
        )
    }
}

pub fn first_divergence(expected: &DistanceMatrix, actual: &DistanceMatrix) -> Option<Divergence> {
    expected.first_difference(actual).map(|(i, j)| Divergence {
        source: j,
        vertex: i,
        expected: if i < expected.n() && j < expected.n() {
            expected.get(i, j)
        } else {
            UNREACHED
        },
        actual: if i < actual.n() && j < actual.n() {
            actual.get(i, j)
        } else {
            UNREACHED
        },
    })
}
