//! Steps the PST construction one level at a time on a small hypercube and
//! prints each level's new tree vertices and the cumulative access count.
//!
//! ```bash
//! cargo run --example level_trace
//! ```

use pst_apsp::graph::gen_hypercube;
use pst_apsp::pst::Pst;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_hypercube(3)?;
    let mut pst = Pst::new(&g);
    while !pst.active().is_empty() {
        let before = pst.pool().total();
        pst.step()?;
        println!(
            "level {}: {} new tree vertices, {} accesses so far, {} sources still active",
            pst.level(),
            pst.pool().total() - before,
            pst.stats().accesses,
            pst.active().len()
        );
    }

    let pool = pst.pool();
    println!("\nT(0):");
    let mut stack = vec![pool.root(0)];
    while let Some(h) = stack.pop() {
        let t = pool.get(h);
        let cor = t
            .cor()
            .map(|c| format!("T({})[{}]", pool.source_of(c), pool.vertex(c)));
        println!(
            "  {:indent$}{} (cor {})",
            "",
            t.vertex(),
            cor.unwrap_or_else(|| "-".into()),
            indent = 2 * pool.depth(h)
        );
        stack.extend(pool.children(h).rev());
    }
    println!("alpha = {}", pst.stats().alpha());
    Ok(())
}
