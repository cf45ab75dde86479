//! All-pairs BFS baseline: one breadth-first search per source.
//!
//! Each search stops the moment its discovered count reaches `n`, even in
//! the middle of a neighbor loop. On disconnected graphs that never
//! happens and the search ends when its queue drains.

use std::time::Instant;

use crate::graph::{Graph, VertexId};
use crate::matrix::{DistanceMatrix, ParentMatrix, UNREACHED};
use crate::ring::RingQueue;
use crate::stats::{AccessStats, ApspOutput, Timings};

pub fn bfs_apsp(g: &Graph) -> ApspOutput {
    let n = g.vertex_count();
    let start = Instant::now();
    let mut distances = DistanceMatrix::new(n);
    let mut parents = ParentMatrix::new(n);
    let mut stats = AccessStats::new(n);
    let mut queue = RingQueue::with_capacity(n);
    let init = start.elapsed();

    let start = Instant::now();
    for source in g.vertices() {
        search(
            g,
            source,
            &mut distances,
            &mut parents,
            &mut stats,
            &mut queue,
        );
    }
    let main = start.elapsed();

    ApspOutput {
        distances,
        parents,
        stats,
        timings: Timings { init, main },
    }
}

/// Fills column `source` of `distances` and `parents`, which must still be
/// in their initial state.
pub fn bfs_single_source(
    g: &Graph,
    source: VertexId,
    distances: &mut DistanceMatrix,
    parents: &mut ParentMatrix,
    stats: &mut AccessStats,
) {
    let mut queue = RingQueue::with_capacity(g.vertex_count());
    search(g, source, distances, parents, stats, &mut queue);
}

fn search(
    g: &Graph,
    source: VertexId,
    distances: &mut DistanceMatrix,
    parents: &mut ParentMatrix,
    stats: &mut AccessStats,
    queue: &mut RingQueue<VertexId>,
) {
    let n = g.vertex_count();
    let dist = distances.column_mut(source as usize);
    let parent = parents.tree_mut(source as usize);
    let mut found = 1;
    if found == n {
        return;
    }
    queue.clear();
    queue
        .push(source)
        .expect("fresh queue has room for the source");
    while let Some(u) = queue.pop() {
        stats.expansions += 1;
        let next = dist[u as usize] + 1;
        for &w in g.neighbors(u) {
            stats.accesses += 1;
            if dist[w as usize] == UNREACHED {
                dist[w as usize] = next;
                parent[w as usize] = u;
                found += 1;
                if found == n {
                    return;
                }
                queue.push(w).expect("each vertex is enqueued at most once");
            }
        }
    }
}
