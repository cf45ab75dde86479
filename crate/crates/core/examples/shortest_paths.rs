//! Runs PST and BFS on the same graph, compares their matrices and access
//! counts, and walks one shortest path back through the parent matrix.
//!
//! ```bash
//! cargo run --release --example shortest_paths [n] [n_prime] [seed]
//! ```

use pst_apsp::bfs::bfs_apsp;
use pst_apsp::graph::gen_scale_free;
use pst_apsp::pst::pst_apsp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let n = args.next().transpose()?.unwrap_or(512) as usize;
    let n_prime = args.next().transpose()?.unwrap_or(2) as usize;
    let seed = args.next().transpose()?.unwrap_or(1);

    let g = gen_scale_free(n, n_prime, seed)?;
    let pst = pst_apsp(&g)?;
    let bfs = bfs_apsp(&g);
    assert_eq!(pst.distances, bfs.distances, "PST and BFS disagree");

    println!("n = {n}, m = {}", g.edge_count());
    for (name, out) in [("pst", &pst), ("bfs", &bfs)] {
        println!(
            "{name}: accesses = {:>10}  alpha = {:>6}  main = {:?}",
            out.stats.accesses,
            out.stats.alpha(),
            out.timings.main
        );
    }
    println!(
        "bfs/pst accesses: {:.2}",
        bfs.stats.accesses as f64 / pst.stats.accesses as f64
    );

    let (from, to) = (n - 1, 0);
    let path = pst.parents.path_to_source(from, to);
    println!(
        "path {from} -> {to}: {path:?} (distance {:?})",
        pst.distances.distance(from, to)
    );
    Ok(())
}
