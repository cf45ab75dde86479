//! Checks PST against Floyd-Warshall on random graphs, then shows what the
//! parent checker reports for a corrupted parent matrix.
//!
//! ```bash
//! cargo run --example verify_oracle
//! ```

use pst_apsp::graph::{build_graph, gen_scale_free};
use pst_apsp::oracle::{first_divergence, floyd_warshall, verify_parents};
use pst_apsp::pst::pst_apsp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..20 {
        let g = gen_scale_free(100, 2 + seed as usize % 5, seed)?;
        let out = pst_apsp(&g)?;
        if let Some(div) = first_divergence(&floyd_warshall(&g), &out.distances) {
            println!("seed {seed}: {div}");
            std::process::exit(1);
        }
        assert!(verify_parents(&g, &out.distances, &out.parents)?.is_empty());
    }
    println!("20 graphs: PST matches Floyd-Warshall, parent matrices valid");

    // Two triangles with no edge between them.
    let g = build_graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?;
    let mut out = pst_apsp(&g)?;
    out.parents.set(2, 0, 1);
    out.parents.set(3, 0, 4);
    for v in verify_parents(&g, &out.distances, &out.parents)? {
        println!("violation: {v}");
    }
    Ok(())
}
