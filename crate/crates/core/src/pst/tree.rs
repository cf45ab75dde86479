//! Pooled storage for the shortest path trees of every source.
//!
//! The pool is one flat array split into `n` segments of `n` slots, one per
//! source. A tree never holds more than one node per graph vertex, so a
//! segment cannot overflow. Handles are flat `u32` offsets.
//!
//! A node's children are always created in one burst while that node is
//! being expanded, with nothing else appended to the same segment in
//! between. Children are therefore stored as a contiguous slot range
//! `first_child .. first_child + child_count`, in creation order.

use crate::graph::VertexId;

/// Handle to a tree vertex in a [`TVertexPool`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct THandle(pub(crate) u32);

impl THandle {
    pub(crate) const NONE: u32 = u32::MAX;

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A copy of one tree vertex's fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TVertex {
    vertex: VertexId,
    cor: u32,
    parent: u32,
    child_count: u32,
}

impl TVertex {
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    /// The node for the same graph vertex, one level shallower, in the tree
    /// of the first-hop neighbor. Roots have none.
    pub fn cor(&self) -> Option<THandle> {
        (self.cor != THandle::NONE).then_some(THandle(self.cor))
    }

    pub fn parent(&self) -> Option<THandle> {
        (self.parent != THandle::NONE).then_some(THandle(self.parent))
    }

    pub fn child_count(&self) -> usize {
        self.child_count as usize
    }
}

/// Field-per-array storage: scanning a node's children reads one
/// contiguous run of `vertex` ids.
#[derive(Debug, Clone)]
pub struct TVertexPool {
    n: usize,
    vertex: Vec<VertexId>,
    cor: Vec<u32>,
    parent: Vec<u32>,
    /// `(first_child, child_count)`, read together on every expansion.
    kids: Vec<(u32, u32)>,
    lens: Vec<u32>,
}

impl TVertexPool {
    /// Allocates every segment and creates the root of each tree.
    pub fn new(n: usize) -> Self {
        assert!(
            n * n <= u32::MAX as usize,
            "pool of {n} trees exceeds u32 handles"
        );
        let slots = n * n;
        let mut vertex = vec![VertexId::MAX; slots];
        for s in 0..n {
            vertex[s * n] = s as VertexId;
        }
        TVertexPool {
            n,
            vertex,
            cor: vec![THandle::NONE; slots],
            parent: vec![THandle::NONE; slots],
            kids: vec![(0, 0); slots],
            lens: vec![1; n],
        }
    }

    pub fn root(&self, source: VertexId) -> THandle {
        THandle((source as usize * self.n) as u32)
    }

    pub fn get(&self, h: THandle) -> TVertex {
        let i = h.index();
        TVertex {
            vertex: self.vertex[i],
            cor: self.cor[i],
            parent: self.parent[i],
            child_count: self.kids[i].1,
        }
    }

    #[inline]
    pub fn vertex(&self, h: THandle) -> VertexId {
        self.vertex[h.index()]
    }

    #[inline]
    pub fn cor(&self, h: THandle) -> Option<THandle> {
        let c = self.cor[h.index()];
        (c != THandle::NONE).then_some(THandle(c))
    }

    /// Which tree a handle belongs to.
    pub fn source_of(&self, h: THandle) -> VertexId {
        (h.index() / self.n) as VertexId
    }

    pub fn children(&self, h: THandle) -> impl DoubleEndedIterator<Item = THandle> + Clone {
        self.child_range(h).map(THandle)
    }

    /// Slot range of the children of `h`.
    #[inline]
    pub(crate) fn child_range(&self, h: THandle) -> std::ops::Range<u32> {
        let (first, count) = self.kids[h.index()];
        first..first + count
    }

    /// Appends a child of `parent` to tree `source`.
    #[inline]
    pub fn push_child(
        &mut self,
        source: VertexId,
        parent: THandle,
        vertex: VertexId,
        cor: THandle,
    ) -> THandle {
        let s = source as usize;
        debug_assert_eq!(self.source_of(parent), source);
        let len = self.lens[s] as usize;
        assert!(len < self.n, "tree {source} already holds every vertex");
        let idx = (s * self.n + len) as u32;
        self.lens[s] += 1;
        let i = idx as usize;
        self.vertex[i] = vertex;
        self.cor[i] = cor.0;
        self.parent[i] = parent.0;
        let kids = &mut self.kids[parent.index()];
        if kids.1 == 0 {
            kids.0 = idx;
        } else {
            debug_assert_eq!(kids.0 + kids.1, idx, "children must be contiguous");
        }
        kids.1 += 1;
        THandle(idx)
    }

    /// Nodes in tree `source`, root first, in creation order.
    pub fn tree(&self, source: VertexId) -> impl Iterator<Item = THandle> {
        let start = source as usize * self.n;
        (start..start + self.lens[source as usize] as usize).map(|i| THandle(i as u32))
    }

    pub fn tree_len(&self, source: VertexId) -> usize {
        self.lens[source as usize] as usize
    }

    /// Total tree vertices across all trees.
    pub fn total(&self) -> usize {
        self.lens.iter().map(|&l| l as usize).sum()
    }

    pub fn depth(&self, h: THandle) -> usize {
        let mut depth = 0;
        let mut cur = h.index();
        while self.parent[cur] != THandle::NONE {
            depth += 1;
            cur = self.parent[cur] as usize;
        }
        depth
    }

    /// Bytes held by the field arrays.
    pub fn memory_bytes(&self) -> usize {
        5 * self.vertex.len() * std::mem::size_of::<u32>()
    }
}
