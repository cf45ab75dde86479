//! The distance-gated queue that drives each source's expansion.
//!
//! ```bash
//! cargo run --example dqueue
//! ```

use pst_apsp::graph::gen_hypercube;
use pst_apsp::pst::{DQueue, Pst};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_hypercube(3)?;
    let mut pst = Pst::new(&g);
    pst.step()?;
    let pool = pst.pool();
    let handles: Vec<_> = pool.tree(0).skip(1).collect();

    let mut q = DQueue::with_capacity(4);
    q.enqueue(handles[0], 1)?;
    q.enqueue(handles[1], 1)?;
    q.enqueue(handles[2], 2)?;
    println!(
        "queued: {:?}",
        q.iter()
            .map(|(h, d)| (pool.vertex(h), d))
            .collect::<Vec<_>>()
    );

    while let Some(h) = q.dequeue(1) {
        println!("dequeue(1) -> vertex {}", pool.vertex(h));
    }
    println!("dequeue(1) on a distance-2 front -> {:?}", q.dequeue(1));
    println!(
        "dequeue(2) -> vertex {:?}",
        q.dequeue(2).map(|h| pool.vertex(h))
    );

    for _ in 0..4 {
        q.enqueue(handles[0], 3)?;
    }
    println!(
        "fifth enqueue into capacity 4: {:?}",
        q.enqueue(handles[0], 3)
    );
    Ok(())
}
