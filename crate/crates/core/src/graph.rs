//! Ordinary (abstract) multigraphs with loops, and a small union-find.

use alloc::vec::Vec;

use crate::EdgeSet;

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` when `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        self.sets -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.sets
    }

    /// Dense component ids `0..count()`, numbered by first appearance.
    pub fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut id = alloc::vec![usize::MAX; n];
        let mut out = Vec::with_capacity(n);
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = next;
                next += 1;
            }
            out.push(id[r]);
        }
        out
    }
}

/// A finite multigraph; loops and parallel edges allowed. Edge `i` joins
/// `ends[i].0` and `ends[i].1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryGraph {
    vertex_count: usize,
    ends: Vec<(usize, usize)>,
}

impl OrdinaryGraph {
    pub fn new(vertex_count: usize, ends: Vec<(usize, usize)>) -> Self {
        assert!(
            ends.iter()
                .all(|&(a, b)| a < vertex_count && b < vertex_count),
            "edge endpoint out of range"
        );
        assert!(ends.len() <= crate::MAX_EDGES, "too many edges");
        Self { vertex_count, ends }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.ends.len())
    }

    fn union_find(&self, edges: EdgeSet) -> DisjointSets {
        let mut uf = DisjointSets::new(self.vertex_count);
        for e in edges.iter() {
            let (a, b) = self.ends[e];
            uf.union(a, b);
        }
        uf
    }

    /// Components of the spanning subgraph with edge set `edges`.
    pub fn components(&self, edges: EdgeSet) -> usize {
        self.union_find(edges).count()
    }

    /// Contract every edge of `collapse` and keep only the edges of `keep`
    /// (renumbered in increasing order); other edges are deleted.
    pub fn quotient(&self, collapse: EdgeSet, keep: EdgeSet) -> OrdinaryGraph {
        let mut uf = self.union_find(collapse);
        let count = uf.count();
        let label = uf.labels();
        let ends = keep
            .iter()
            .map(|e| {
                let (a, b) = self.ends[e];
                (label[a], label[b])
            })
            .collect();
        OrdinaryGraph::new(count, ends)
    }

    /// Nullity `e(F) - v + c(F)` of the spanning subgraph on `edges`.
    pub fn nullity(&self, edges: EdgeSet) -> usize {
        edges.len() + self.components(edges) - self.vertex_count
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.ends[e];
        a == b
    }

    /// An edge whose removal increases the number of components.
    pub fn is_bridge(&self, e: usize) -> bool {
        let all = self.all_edges();
        self.components(all.without(e)) > self.components(all)
    }
}
