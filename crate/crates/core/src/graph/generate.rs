//! Hypercube and preferential-attachment generators.
//!
//! Both generators emit graphs whose neighbor lists are in ascending id
//! order, so saving and reloading an edge list reproduces them exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, VertexId, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Hypercube,
    ScaleFree,
}

/// Parameters for one generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GraphKind,
    pub n: usize,
    /// Seed clique size and edges per new vertex. Scale-free only.
    pub n_prime: usize,
    /// Scale-free only.
    pub seed: u64,
}

impl GenSpec {
    pub fn hypercube(n: usize) -> Self {
        GenSpec {
            kind: GraphKind::Hypercube,
            n,
            n_prime: 0,
            seed: 0,
        }
    }

    pub fn scale_free(n: usize, n_prime: usize, seed: u64) -> Self {
        GenSpec {
            kind: GraphKind::ScaleFree,
            n,
            n_prime,
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self.kind {
            GraphKind::Hypercube => {
                if !self.n.is_power_of_two() || self.n < 2 {
                    return Err(GraphError::InvalidParams(format!(
                        "hypercube size {} is not a power of two >= 2",
                        self.n
                    )));
                }
                gen_hypercube(self.n.trailing_zeros())
            }
            GraphKind::ScaleFree => gen_scale_free(self.n, self.n_prime, self.seed),
        }
    }
}

/// The `k`-dimensional hypercube: `2^k` vertices, adjacent iff their ids
/// differ in exactly one bit. Neighbors are listed by ascending id.
pub fn gen_hypercube(k: u32) -> Result<Graph, GraphError> {
    if k == 0 || (1usize << k.min(31)) > MAX_VERTICES {
        return Err(GraphError::InvalidParams(format!(
            "hypercube dimension {k} out of range"
        )));
    }
    let n = 1u64 << k;
    let edges = (0..n).flat_map(|u| {
        let mut up: Vec<u64> = (0..k).map(|b| u ^ (1 << b)).filter(|&v| v > u).collect();
        up.sort_unstable();
        up.into_iter().map(move |v| (u, v))
    });
    Graph::from_edges(n as usize, edges)
}

/// Preferential-attachment graph grown from a complete graph on `n_prime`
/// vertices.
///
/// Each vertex `v >= n_prime` attaches to `n_prime` distinct earlier
/// vertices. Picks are drawn with probability proportional to degree, all
/// against the degree snapshot taken before `v` is attached, and repeats are
/// rejected. The draw is a uniform index into the multiset of edge
/// endpoints, where each vertex appears once per incident edge.
///
/// The RNG is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`) and every
/// draw samples a `u64` range, so output is identical across platforms.
pub fn gen_scale_free(n: usize, n_prime: usize, seed: u64) -> Result<Graph, GraphError> {
    if n_prime < 2 || n_prime >= n {
        return Err(GraphError::InvalidParams(format!(
            "scale-free needs 2 <= n_prime < n, got n = {n}, n_prime = {n_prime}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edge_total = n_prime * (n_prime - 1) / 2 + (n - n_prime) * n_prime;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(edge_total);
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * edge_total);

    for u in 0..n_prime as VertexId {
        for v in u + 1..n_prime as VertexId {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }

    let mut picks = Vec::with_capacity(n_prime);
    for v in n_prime as VertexId..n as VertexId {
        let snapshot = endpoints.len() as u64;
        picks.clear();
        while picks.len() < n_prime {
            let u = endpoints[rng.gen_range(0..snapshot) as usize];
            if !picks.contains(&u) {
                picks.push(u);
            }
        }
        picks.sort_unstable();
        for &u in &picks {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u as u64, v as u64)))
}
