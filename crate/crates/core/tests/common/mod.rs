#![allow(dead_code)]

use std::collections::VecDeque;

use pst_apsp::bfs::bfs_apsp;
use pst_apsp::graph::Graph;
use pst_apsp::oracle::{first_divergence, floyd_warshall, verify_parents};
use pst_apsp::pst::{pst_apsp, DQueue, Pst, TVertexPool};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random spanning tree plus every other pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<u64> = (0..n as u64).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((order[rng.gen_range(0..i)], order[i]));
    }
    let tree: std::collections::HashSet<_> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for u in 0..n as u64 {
        for v in u + 1..n as u64 {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.shuffle(rng);
    Graph::from_edges(n, edges).unwrap()
}

/// At least two components: vertices are split into groups and edges only
/// join vertices of the same group.
pub fn random_disconnected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    let k = rng.gen_range(2..=n.min(5));
    let mut group: Vec<usize> = (0..n)
        .map(|i| if i < k { i } else { rng.gen_range(0..k) })
        .collect();
    group.shuffle(rng);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if group[u] == group[v] && rng.gen_bool(p) {
                edges.push((u as u64, v as u64));
            }
        }
    }
    edges.shuffle(rng);
    Graph::from_edges(n, edges).unwrap()
}

pub struct Checked {
    pub pst_accesses: u64,
    pub bfs_accesses: u64,
}

/// PST, BFS and Floyd-Warshall agree and both parent matrices are valid.
pub fn cross_check(g: &Graph) -> Result<Checked, String> {
    let pst = pst_apsp(g).map_err(|e| e.to_string())?;
    let bfs = bfs_apsp(g);
    let fw = floyd_warshall(g);
    if let Some(d) = first_divergence(&fw, &pst.distances) {
        return Err(format!("pst vs floyd-warshall: {d}"));
    }
    if let Some(d) = first_divergence(&fw, &bfs.distances) {
        return Err(format!("bfs vs floyd-warshall: {d}"));
    }
    for (name, out) in [("pst", &pst), ("bfs", &bfs)] {
        let v = verify_parents(g, &out.distances, &out.parents).map_err(|e| e.to_string())?;
        if let Some(first) = v.first() {
            return Err(format!(
                "{name}: {} parent violations, first {first}",
                v.len()
            ));
        }
    }
    Ok(Checked {
        pst_accesses: pst.stats.accesses,
        bfs_accesses: bfs.stats.accesses,
    })
}

#[derive(Debug, Clone, Copy)]
pub enum Op {
    /// Enqueue at `last + bump`.
    Enqueue { bump: u32 },
    /// Dequeue at `front + offset`; offset 0 must succeed.
    Dequeue { offset: u32 },
}

/// Replays `ops` against a `DQueue` of capacity `cap` and a `VecDeque`
/// model. Enqueues that would exceed `cap` are skipped, so the sequence
/// stays valid; the queue must never report overflow on it.
pub fn check_dqueue_ops(cap: usize, ops: &[Op]) -> Result<(), String> {
    let pool = TVertexPool::new(cap.max(1));
    let handle = |i: usize| pool.root((i % cap.max(1)) as u32);
    let mut q = DQueue::with_capacity(cap);
    let mut model: VecDeque<(usize, u32)> = VecDeque::new();
    let mut last = 0u32;
    let mut next = 0usize;
    for (step, op) in ops.iter().enumerate() {
        match *op {
            Op::Enqueue { bump } => {
                if model.len() == cap {
                    if q.enqueue(handle(next), last).is_ok() {
                        return Err(format!("step {step}: enqueue past capacity {cap} accepted"));
                    }
                    continue;
                }
                last += bump;
                q.enqueue(handle(next), last)
                    .map_err(|e| format!("step {step}: {e}"))?;
                model.push_back((next, last));
                next += 1;
            }
            Op::Dequeue { offset } => {
                let want = model.front().map(|&(_, d)| d + offset).unwrap_or(offset);
                let before: Vec<_> = q.iter().collect();
                let got = q.dequeue(want);
                match model.front().copied() {
                    Some((i, d)) if d == want => {
                        if got != Some(handle(i)) {
                            return Err(format!(
                                "step {step}: dequeue({want}) = {got:?}, expected item {i}"
                            ));
                        }
                        model.pop_front();
                    }
                    _ => {
                        if got.is_some() {
                            return Err(format!(
                                "step {step}: gated dequeue({want}) returned {got:?}"
                            ));
                        }
                        if q.iter().collect::<Vec<_>>() != before {
                            return Err(format!("step {step}: failed dequeue mutated the queue"));
                        }
                    }
                }
            }
        }
        let dists: Vec<u32> = q.iter().map(|(_, d)| d).collect();
        if dists.windows(2).any(|w| w[0] > w[1]) {
            return Err(format!("step {step}: distances out of order {dists:?}"));
        }
        if q.len() != model.len() || q.len() > cap {
            return Err(format!(
                "step {step}: len {} vs model {}",
                q.len(),
                model.len()
            ));
        }
    }
    Ok(())
}

/// Steps PST level by level and checks every active source's queue: sorted
/// by distance, only levels `d - 1` and `d` present, never above `n`.
pub fn check_pst_queues(g: &Graph) -> Result<(), String> {
    let n = g.vertex_count();
    let mut pst = Pst::new(g);
    while !pst.active().is_empty() {
        pst.step().map_err(|e| e.to_string())?;
        let level = pst.level();
        for &v in pst.active() {
            let q = pst.source(v).queue();
            let dists: Vec<u32> = q.iter().map(|(_, d)| d).collect();
            if dists.windows(2).any(|w| w[0] > w[1]) {
                return Err(format!("level {level}, source {v}: unsorted {dists:?}"));
            }
            if dists.iter().any(|&d| d != level) {
                return Err(format!(
                    "level {level}, source {v}: stale entries {dists:?}"
                ));
            }
            if q.len() > n {
                return Err(format!(
                    "level {level}, source {v}: {} entries for n = {n}",
                    q.len()
                ));
            }
        }
    }
    Ok(())
}
