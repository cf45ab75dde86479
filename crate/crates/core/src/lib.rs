//! Unweighted all-pairs shortest paths by pruning with shortest path trees.
//!
//! [`pst::pst_apsp`] builds the shortest path tree of every vertex level by
//! level, in lockstep across all sources. When a search from `v` steps
//! through a neighbor `w`, it follows only the edges of `w`'s own tree
//! instead of every edge out of each vertex. [`bfs::bfs_apsp`] is the
//! plain one-BFS-per-source baseline, and [`oracle`] holds the
//! Floyd-Warshall and tree-validity references both are checked against.
//!
//! Both searches count adjacency accesses. The ratio `α = accesses / n²`
//! is the average number of neighbors (or tree children) examined per
//! vertex per search. [`bench`] runs the hypercube and scale-free grids and
//! renders comparison tables.
//!
//! ```
//! use pst_apsp::{bfs::bfs_apsp, graph::gen_hypercube, pst::pst_apsp};
//!
//! let g = gen_hypercube(6).unwrap();
//! let pst = pst_apsp(&g).unwrap();
//! let bfs = bfs_apsp(&g);
//! assert_eq!(pst.distances, bfs.distances);
//! assert_eq!(pst.stats.alpha().to_string(), "1.71");
//! assert_eq!(bfs.stats.alpha().to_string(), "5.42");
//! ```

pub mod bench;
pub mod bfs;
pub mod cli;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod pst;
pub mod ring;
pub mod stats;
