use alloc::vec::Vec;

use super::{flags, RibbonGraph};
use crate::graph::DisjointSets;
use crate::EdgeSet;

/// A spanning subgraph: all vertices of `parent`, edges `edges`.
#[derive(Debug, Clone, Copy)]
pub struct SpanningSubgraph<'a> {
    parent: &'a RibbonGraph,
    edges: EdgeSet,
}

impl<'a> SpanningSubgraph<'a> {
    pub fn new(parent: &'a RibbonGraph, edges: EdgeSet) -> Self {
        assert!(
            edges.is_subset(parent.all_edges()),
            "edge set {edges:?} exceeds the parent's edges"
        );
        Self { parent, edges }
    }

    pub fn parent(&self) -> &'a RibbonGraph {
        self.parent
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.vertex_count()
    }

    /// `c(F)`.
    pub fn components(&self) -> usize {
        let mut uf = DisjointSets::new(self.parent.vertex_count());
        for e in self.edges.iter() {
            let (a, b) = self.parent.endpoints(e);
            uf.union(a, b);
        }
        uf.count()
    }

    /// `bc(F)`.
    pub fn boundary_components(&self) -> usize {
        flags::boundary_components(self.parent, self.edges)
    }

    /// `s(F) = 2c(F) - v(F) + e(F) - bc(F)`; twice the orientable genus, or the
    /// non-orientable genus, of the closed surface obtained by capping `F`.
    pub fn genus_s(&self) -> usize {
        let plus = 2 * self.components() + self.edges.len();
        let minus = self.vertex_count() + self.boundary_components();
        debug_assert!(plus >= minus, "negative genus");
        plus - minus
    }

    /// `n(F) = e(F) - v(F) + c(F)`.
    pub fn nullity(&self) -> usize {
        self.edges.len() + self.components() - self.vertex_count()
    }

    /// Whether some choice of vertex flips makes every edge of `F` untwisted.
    pub fn is_orientable(&self) -> bool {
        let g = self.parent;
        let n = g.vertex_count();
        let mut adj: Vec<Vec<(usize, bool)>> = alloc::vec![Vec::new(); n];
        for e in self.edges.iter() {
            let (a, b) = g.endpoints(e);
            let t = g.sign(e).is_twisted();
            if a == b {
                if t {
                    return false;
                }
                continue;
            }
            adj[a].push((b, t));
            adj[b].push((a, t));
        }
        // flip[v] propagated along a spanning forest, then checked on every edge
        let mut flip: Vec<Option<bool>> = alloc::vec![None; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            stack.push(root);
            while let Some(u) = stack.pop() {
                let fu = flip[u].unwrap();
                for &(w, t) in &adj[u] {
                    let want = fu ^ t;
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            stack.push(w);
                        }
                        Some(fw) if fw != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn profile_entry(&self) -> ProfileEntry {
        let c = self.components();
        let bc = self.boundary_components();
        let v = self.vertex_count();
        let e = self.edges.len();
        ProfileEntry {
            components: c,
            boundary_components: bc,
            genus_s: 2 * c + e - v - bc,
            nullity: e + c - v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProfileEntry {
    pub components: usize,
    pub boundary_components: usize,
    pub genus_s: usize,
    pub nullity: usize,
}

/// `(c, bc, s, n)` for every spanning subgraph, indexed by edge bitmask.
///
/// Two labelled ribbon graphs with the same profile agree on every invariant
/// the polynomials see; this is how constructed graphs are compared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgraphProfile {
    pub vertex_count: usize,
    pub entries: Vec<ProfileEntry>,
}

impl SubgraphProfile {
    pub fn of(g: &RibbonGraph) -> SubgraphProfile {
        assert!(
            g.edge_count() <= 24,
            "profile of a graph this large is not tabulable"
        );
        SubgraphProfile {
            vertex_count: g.vertex_count(),
            entries: g
                .all_edges()
                .subsets()
                .map(|f| g.subgraph(f).profile_entry())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn components_examples() {
        let m1 = fixtures::m1();
        let th = fixtures::theta();
        assert_eq!(m1.subgraph(EdgeSet(1)).components(), 1);
        assert_eq!(th.subgraph(EdgeSet::EMPTY).components(), 2);
        assert_eq!(th.subgraph(EdgeSet(1)).components(), 1);
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(fixtures::b1().full().boundary_components(), 2);
        assert_eq!(fixtures::m1().full().boundary_components(), 1);
        assert_eq!(fixtures::p2().full().boundary_components(), 3);
        assert_eq!(fixtures::t1().full().boundary_components(), 1);
        assert_eq!(fixtures::theta().full().boundary_components(), 3);
        assert_eq!(
            fixtures::theta()
                .subgraph(EdgeSet::EMPTY)
                .boundary_components(),
            2
        );
    }

    #[test]
    fn genus_examples() {
        assert_eq!(fixtures::b1().full().genus_s(), 0);
        assert_eq!(fixtures::m1().full().genus_s(), 1);
        assert_eq!(fixtures::t1().full().genus_s(), 2);
        assert_eq!(fixtures::p2().full().genus_s(), 0);
    }

    #[test]
    fn orientability_examples() {
        assert!(!fixtures::m1().full().is_orientable());
        assert!(fixtures::t1().full().is_orientable());
        for g in fixtures::all() {
            assert!(g.subgraph(EdgeSet::EMPTY).is_orientable());
        }
        // a cycle through two twisted non-loop edges can be untwisted by a flip
        let g = RibbonGraph::builder()
            .vertex("u", ["a1", "b1"])
            .vertex("w", ["a2", "b2"])
            .edge("a", "a1", "a2", super::super::Sign::Minus)
            .edge("b", "b1", "b2", super::super::Sign::Minus)
            .build()
            .unwrap();
        assert!(g.full().is_orientable());
        assert_eq!(g.full().genus_s(), 0);
    }
}
