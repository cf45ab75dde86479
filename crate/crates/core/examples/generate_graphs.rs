//! Builds a hypercube and a scale-free graph and prints their degree
//! profiles.
//!
//! ```bash
//! cargo run --example generate_graphs
//! ```

use pst_apsp::graph::{gen_hypercube, gen_scale_free};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q4 = gen_hypercube(4)?;
    let d = q4.degree_summary();
    println!(
        "Q4: n = {}, m = {}, degree {}..{}",
        q4.vertex_count(),
        q4.edge_count(),
        d.min,
        d.max
    );
    println!("  neighbors of 5: {:?}", q4.neighbors(5));

    for (n_prime, label) in [(2, "sparse"), (16, "dense")] {
        let g = gen_scale_free(256, n_prime, 42)?;
        let d = g.degree_summary();
        println!(
            "scale-free {label} (n' = {n_prime}): m = {}, degree min/avg/max = {}/{:.2}/{}, connected = {}",
            g.edge_count(),
            d.min,
            d.avg,
            d.max,
            g.is_connected()
        );
    }
    Ok(())
}
