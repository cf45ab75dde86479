//! All-pairs shortest paths by pruning with neighbor shortest path trees.
//!
//! Every source grows its tree `T(v)` one level at a time, and all sources
//! finish level `d - 1` before any starts level `d`. At level 1, `v` links
//! each neighbor `w` under its root with `cor` pointing at the root of
//! `T(w)`. At level `d > 1`, `v` expands each depth-`(d-1)` node `w'` by
//! walking only the children of `w'.cor`, which sit at depth `d - 1` of the
//! first-hop neighbor's tree and were built during the previous level.
//! Edges that are not in that neighbor's tree are never looked at.
//!
//! A vertex `x` at distance `d` ends up claimed by the first neighbor `w`
//! of `v`, in adjacency order, with `dist(w, x) = d - 1`. By induction on
//! `d`, the parent `p` of `x` in `T(w)` was claimed by the same `w`, so `x`
//! is reached from `p'`. That is why the level barrier is enough for
//! exactness.
//!
//! Memory: besides the `n × n` distance and parent matrices, every tree
//! vertex of every source is materialized, up to `n²` pooled records.

mod dqueue;
mod tree;

use std::time::Instant;

use thiserror::Error;

pub use dqueue::DQueue;
pub use tree::{THandle, TVertex, TVertexPool};

use crate::graph::{Graph, VertexId};
use crate::matrix::{DistanceMatrix, ParentMatrix, NOT_SEARCHED};
use crate::ring::QueueOverflow;
use crate::stats::{AccessStats, ApspOutput, Timings};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum PstError {
    #[error("d-queue of source {vertex}: {overflow}")]
    QueueOverflow {
        vertex: VertexId,
        overflow: QueueOverflow,
    },
}

/// Per-source search state.
#[derive(Debug, Clone)]
pub struct SourceState {
    root: THandle,
    found: u32,
    queue: DQueue,
}

impl SourceState {
    pub fn root(&self) -> THandle {
        self.root
    }

    /// Vertices whose distance from this source is known, the source included.
    pub fn found(&self) -> u32 {
        self.found
    }

    pub fn queue(&self) -> &DQueue {
        &self.queue
    }
}

/// A PST run that can be stepped one level at a time.
pub struct Pst<'g> {
    graph: &'g Graph,
    pool: TVertexPool,
    sources: Vec<SourceState>,
    distances: DistanceMatrix,
    parents: ParentMatrix,
    stats: AccessStats,
    active: Vec<VertexId>,
    level: u32,
}

impl<'g> Pst<'g> {
    /// Allocates the matrices, the tree pool with every root, and one
    /// d-queue of capacity `n` per source.
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        let pool = TVertexPool::new(n);
        let sources = graph
            .vertices()
            .map(|v| SourceState {
                root: pool.root(v),
                found: 1,
                queue: DQueue::with_capacity(n),
            })
            .collect();
        let active = if n > 1 {
            graph.vertices().collect()
        } else {
            Vec::new()
        };
        Pst {
            graph,
            pool,
            sources,
            distances: DistanceMatrix::new(n),
            parents: ParentMatrix::new(n),
            stats: AccessStats::new(n),
            active,
            level: 0,
        }
    }

    /// Grows `T(v)` to depth `d`. All trees must already be complete to
    /// depth `d - 1`.
    pub fn extend(&mut self, v: VertexId, d: u32) -> Result<(), PstError> {
        let n = self.graph.vertex_count() as u32;
        let Pst {
            graph,
            pool,
            sources,
            distances,
            parents,
            stats,
            ..
        } = self;
        let state = &mut sources[v as usize];
        let dist = distances.column_mut(v as usize);
        let parent = parents.tree_mut(v as usize);
        let overflow = |overflow| PstError::QueueOverflow {
            vertex: v,
            overflow,
        };

        if d == 1 {
            stats.expansions += 1;
            for &w in graph.neighbors(v) {
                stats.accesses += 1;
                dist[w as usize] = 1;
                parent[w as usize] = v;
                let w_node = pool.push_child(v, state.root, w, pool.root(w));
                state.queue.enqueue(w_node, 1).map_err(overflow)?;
                state.found += 1;
            }
            return Ok(());
        }

        while let Some(w_node) = state.queue.dequeue(d - 1) {
            stats.expansions += 1;
            let w = pool.vertex(w_node);
            let cor = pool.cor(w_node).expect("non-root tree vertex has a cor");
            for slot in pool.child_range(cor) {
                stats.accesses += 1;
                let x_cor = THandle(slot);
                let x = pool.vertex(x_cor) as usize;
                if parent[x] == NOT_SEARCHED {
                    dist[x] = d;
                    parent[x] = w;
                    let x_node = pool.push_child(v, w_node, x as VertexId, x_cor);
                    state.queue.enqueue(x_node, d).map_err(overflow)?;
                    state.found += 1;
                    if state.found == n {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    /// Runs the next level for every unfinished source. Returns `false`
    /// once no source is left.
    ///
    /// A source retires when it has found all `n` vertices, or when a level
    /// leaves its queue empty, meaning nothing lies at the next distance.
    pub fn step(&mut self) -> Result<bool, PstError> {
        if self.active.is_empty() {
            return Ok(false);
        }
        self.level += 1;
        let d = self.level;
        let n = self.graph.vertex_count() as u32;
        let active = std::mem::take(&mut self.active);
        let mut still_active = Vec::with_capacity(active.len());
        for v in active {
            self.extend(v, d)?;
            let state = &self.sources[v as usize];
            if state.found < n && !state.queue.is_empty() {
                still_active.push(v);
            }
        }
        self.active = still_active;
        Ok(!self.active.is_empty())
    }

    pub fn run(&mut self) -> Result<(), PstError> {
        while self.step()? {}
        Ok(())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn active(&self) -> &[VertexId] {
        &self.active
    }

    pub fn pool(&self) -> &TVertexPool {
        &self.pool
    }

    pub fn source(&self, v: VertexId) -> &SourceState {
        &self.sources[v as usize]
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn parents(&self) -> &ParentMatrix {
        &self.parents
    }

    pub fn stats(&self) -> &AccessStats {
        &self.stats
    }

    pub fn into_output(self, timings: Timings) -> ApspOutput {
        ApspOutput {
            distances: self.distances,
            parents: self.parents,
            stats: self.stats,
            timings,
        }
    }
}

/// Runs PST to completion, timing setup and the level loop separately.
pub fn pst_apsp(g: &Graph) -> Result<ApspOutput, PstError> {
    let start = Instant::now();
    let mut pst = Pst::new(g);
    let init = start.elapsed();
    let start = Instant::now();
    pst.run()?;
    let main = start.elapsed();
    Ok(pst.into_output(Timings { init, main }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::bfs_apsp;
    use crate::graph::{build_graph, gen_hypercube};
    use crate::matrix::Parent;

    fn p3() -> Graph {
        build_graph(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn p3_level_one() {
        let g = p3();
        let mut pst = Pst::new(&g);
        pst.extend(0, 1).unwrap();
        assert_eq!(pst.distances().get(1, 0), 1);
        assert_eq!(pst.source(0).found(), 2);
        let front = pst.source(0).queue().front().unwrap();
        assert_eq!(front.1, 1);
        assert_eq!(pst.pool().get(front.0).vertex(), 1);
        assert_eq!(pst.pool().get(front.0).cor(), Some(pst.pool().root(1)));
    }

    #[test]
    fn p3_level_two_walks_neighbor_tree() {
        let g = p3();
        let mut pst = Pst::new(&g);
        pst.step().unwrap();
        let before = pst.stats().accesses;
        // T(1) root has children 0' and 2'
        let t1_children: Vec<_> = pst
            .pool()
            .children(pst.pool().root(1))
            .map(|h| pst.pool().get(h).vertex())
            .collect();
        assert_eq!(t1_children, vec![0, 2]);
        pst.extend(0, 2).unwrap();
        assert_eq!(pst.stats().accesses - before, 2);
        assert_eq!(pst.distances().get(2, 0), 2);
        assert_eq!(pst.parents().parent(2, 0), Parent::Vertex(1));
        assert_eq!(pst.source(0).found(), 3);

        // cor chain: 2' in T(0) -> 2'' in T(1), one level shallower
        let two = pst
            .pool()
            .tree(0)
            .find(|&h| pst.pool().get(h).vertex() == 2)
            .unwrap();
        let cor = pst.pool().get(two).cor().unwrap();
        assert_eq!(pst.pool().source_of(cor), 1);
        assert_eq!(pst.pool().get(cor).vertex(), 2);
        assert_eq!(pst.pool().depth(two), 2);
        assert_eq!(pst.pool().depth(cor), 1);
    }

    #[test]
    fn empty_level_is_a_no_op() {
        let g = p3();
        let mut pst = Pst::new(&g);
        let before = pst.stats().accesses;
        pst.extend(0, 2).unwrap();
        assert_eq!(pst.stats().accesses, before);
        assert_eq!(pst.source(0).found(), 1);
    }

    #[test]
    fn p3_matches_bfs() {
        let g = p3();
        let out = pst_apsp(&g).unwrap();
        assert_eq!(out.distances, bfs_apsp(&g).distances);
    }

    #[test]
    fn complete_graph_alpha() {
        let edges: Vec<_> = (0..4u32)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = build_graph(4, &edges).unwrap();
        let out = pst_apsp(&g).unwrap();
        assert_eq!(out.stats.accesses, 12);
        assert_eq!(out.stats.alpha().to_string(), "0.75");
    }

    #[test]
    fn disconnected_graph_terminates() {
        let g = build_graph(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let mut pst = Pst::new(&g);
        pst.run().unwrap();
        assert_eq!(pst.distances(), &bfs_apsp(&g).distances);
        assert_eq!(pst.parents().get(3, 0), NOT_SEARCHED);
        assert!(pst.level() <= 3);
    }

    #[test]
    fn single_vertex_and_isolated() {
        let out = pst_apsp(&build_graph(1, &[]).unwrap()).unwrap();
        assert_eq!(out.stats.accesses, 0);
        let out = pst_apsp(&build_graph(2, &[]).unwrap()).unwrap();
        assert_eq!(out.distances.distance(0, 1), None);
    }

    #[test]
    fn one_node_per_vertex_per_tree() {
        let g = gen_hypercube(4).unwrap();
        let mut pst = Pst::new(&g);
        pst.run().unwrap();
        assert_eq!(pst.pool().total(), 16 * 16);
        for v in g.vertices() {
            let mut seen: Vec<_> = pst
                .pool()
                .tree(v)
                .map(|h| pst.pool().get(h).vertex())
                .collect();
            seen.sort_unstable();
            assert_eq!(seen, (0..16).collect::<Vec<_>>());
        }
    }
}
