//! Saves a generated graph as an edge list, reloads it, and shows the
//! parser's line-numbered errors.
//!
//! ```bash
//! cargo run --example edge_list_io
//! ```

use pst_apsp::graph::{gen_scale_free, load_edge_list, parse_edge_list, save_edge_list};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_scale_free(32, 3, 5)?;
    let path = std::env::temp_dir().join("pst_apsp_example.txt");
    save_edge_list(&g, &path)?;
    let back = load_edge_list(&path)?;
    assert_eq!(g, back);
    let text = std::fs::read_to_string(&path)?;
    println!(
        "{} bytes, header {:?}, round trip ok",
        text.len(),
        text.lines().next().unwrap_or("")
    );
    std::fs::remove_file(&path)?;

    for bad in [
        "3 2\n0 1\n1 1\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 7\n",
        "3 2\n0 1\n",
    ] {
        match parse_edge_list(bad) {
            Ok(_) => println!("{bad:?}: accepted"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}
