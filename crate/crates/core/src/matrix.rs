//! Distance and parent matrices.
//!
//! Entry `[i][j]` of either matrix describes vertex `i` in the shortest path
//! tree of source `j`. Storage is source-major: the `n` entries of source
//! `j` are contiguous, which is the access pattern of every search here.

use std::io::{self, Write};

use crate::graph::VertexId;

/// Distance sentinel for pairs with no path.
pub const UNREACHED: u32 = u32::MAX;
/// Parent sentinel for a tree root (the diagonal).
pub const NO_PARENT: u32 = u32::MAX;
/// Parent sentinel for a vertex not (yet) reached from the source.
pub const NOT_SEARCHED: u32 = u32::MAX - 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Zero diagonal, everything else [`UNREACHED`].
    pub fn new(n: usize) -> Self {
        let mut data = vec![UNREACHED; n * n];
        for j in 0..n {
            data[j * n + j] = 0;
        }
        DistanceMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw hop count from `i` to `j`, or [`UNREACHED`].
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[j * self.n + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, d: u32) {
        self.data[j * self.n + i] = d;
    }

    pub fn distance(&self, i: usize, j: usize) -> Option<u32> {
        Some(self.get(i, j)).filter(|&d| d != UNREACHED)
    }

    /// Distances of every vertex to source `j`.
    #[inline]
    pub fn column(&self, j: usize) -> &[u32] {
        &self.data[j * self.n..(j + 1) * self.n]
    }

    #[inline]
    pub fn column_mut(&mut self, j: usize) -> &mut [u32] {
        &mut self.data[j * self.n..(j + 1) * self.n]
    }

    /// First `(i, j)` where the two matrices differ, scanning sources in order.
    pub fn first_difference(&self, other: &DistanceMatrix) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        (0..self.n).find_map(|j| {
            let (a, b) = (self.column(j), other.column(j));
            (0..self.n).find(|&i| a[i] != b[i]).map(|i| (i, j))
        })
    }

    /// Row-per-vertex CSV; [`UNREACHED`] is written as `inf`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.write_all(b",")?;
                }
                match self.get(i, j) {
                    UNREACHED => out.write_all(b"inf")?,
                    d => write!(out, "{d}")?,
                }
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Decoded parent-matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parent {
    Root,
    NotSearched,
    Vertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentMatrix {
    n: usize,
    data: Vec<u32>,
}

impl ParentMatrix {
    /// [`NO_PARENT`] on the diagonal, [`NOT_SEARCHED`] elsewhere.
    pub fn new(n: usize) -> Self {
        let mut data = vec![NOT_SEARCHED; n * n];
        for j in 0..n {
            data[j * n + j] = NO_PARENT;
        }
        ParentMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry: parent of `i` in the tree rooted at `j`, or a sentinel.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[j * self.n + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, p: u32) {
        self.data[j * self.n + i] = p;
    }

    pub fn parent(&self, i: usize, j: usize) -> Parent {
        match self.get(i, j) {
            NO_PARENT => Parent::Root,
            NOT_SEARCHED => Parent::NotSearched,
            p => Parent::Vertex(p),
        }
    }

    /// The tree of source `j` as a parent array indexed by vertex.
    #[inline]
    pub fn tree(&self, j: usize) -> &[u32] {
        &self.data[j * self.n..(j + 1) * self.n]
    }

    #[inline]
    pub fn tree_mut(&mut self, j: usize) -> &mut [u32] {
        &mut self.data[j * self.n..(j + 1) * self.n]
    }

    /// Vertices on the path from `i` up to source `j`, both ends included.
    pub fn path_to_source(&self, i: usize, j: usize) -> Option<Vec<VertexId>> {
        let mut path = vec![i as VertexId];
        let mut cur = i;
        loop {
            match self.parent(cur, j) {
                Parent::Root => return Some(path),
                Parent::NotSearched => return None,
                Parent::Vertex(p) => {
                    if path.len() > self.n {
                        return None;
                    }
                    path.push(p);
                    cur = p as usize;
                }
            }
        }
    }

    /// Row-per-vertex CSV; roots are written as `-`, unreached entries as `?`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.write_all(b",")?;
                }
                match self.get(i, j) {
                    NO_PARENT => out.write_all(b"-")?,
                    NOT_SEARCHED => out.write_all(b"?")?,
                    p => write!(out, "{p}")?,
                }
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}
