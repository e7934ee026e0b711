//! Signed rotation systems.
//!
//! A [`RibbonGraph`] is a set of half-edges partitioned into cyclic vertex
//! rotations, paired into edges, with a twist sign on each edge. Every
//! topological quantity used by the polynomials is computed from this data.

mod embedded;
mod equiv;
mod flags;
mod minor;
mod subgraph;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::OrdinaryGraph;
use crate::{EdgeSet, Error, MAX_EDGES};

pub use embedded::{ComplementInvariants, EmbeddedGraph, SurfaceInvariants};
pub use minor::MinorMode;
pub use subgraph::{ProfileEntry, SpanningSubgraph, SubgraphProfile};

/// Twist of an edge ribbon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_twisted(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_twisted(twisted: bool) -> Sign {
        if twisted {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Vertex {
    label: String,
    rotation: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    label: String,
    halves: [usize; 2],
    sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct HalfEdge {
    label: String,
    vertex: usize,
    position: usize,
    edge: usize,
}

/// A ribbon graph given as a signed rotation system.
///
/// Half-edges are numbered in order of appearance in the vertex rotations;
/// edges and vertices keep their declaration order. Equality is literal
/// (labels, rotations as written, pairings and signs), not isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    half_edges: Vec<HalfEdge>,
}

/// Incremental constructor for [`RibbonGraph`]; validation happens in
/// [`RibbonGraphBuilder::build`].
#[derive(Debug, Clone, Default)]
pub struct RibbonGraphBuilder {
    vertices: Vec<(String, Vec<String>)>,
    edges: Vec<(String, String, String, Sign)>,
}

impl RibbonGraphBuilder {
    pub fn vertex<S, I>(mut self, label: S, rotation: I) -> Self
    where
        S: Into<String>,
        I: IntoIterator,
        I::Item: Into<String>,
    {
        self.vertices
            .push((label.into(), rotation.into_iter().map(Into::into).collect()));
        self
    }

    pub fn edge(
        mut self,
        label: impl Into<String>,
        a: impl Into<String>,
        b: impl Into<String>,
        sign: Sign,
    ) -> Self {
        self.edges.push((label.into(), a.into(), b.into(), sign));
        self
    }

    pub fn build(self) -> Result<RibbonGraph, Error> {
        if self.edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(self.edges.len()));
        }
        let mut vertices = Vec::with_capacity(self.vertices.len());
        let mut half_edges: Vec<HalfEdge> = Vec::new();
        let mut by_label: BTreeMap<String, usize> = BTreeMap::new();
        let mut vertex_labels = BTreeMap::new();
        for (vi, (label, rot)) in self.vertices.into_iter().enumerate() {
            if vertex_labels.insert(label.clone(), vi).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            let mut rotation = Vec::with_capacity(rot.len());
            for (pos, h) in rot.into_iter().enumerate() {
                let id = half_edges.len();
                if by_label.insert(h.clone(), id).is_some() {
                    return Err(Error::DuplicateHalfEdge(h));
                }
                half_edges.push(HalfEdge {
                    label: h,
                    vertex: vi,
                    position: pos,
                    edge: usize::MAX,
                });
                rotation.push(id);
            }
            vertices.push(Vertex { label, rotation });
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_labels = BTreeMap::new();
        for (ei, (label, a, b, sign)) in self.edges.into_iter().enumerate() {
            if edge_labels.insert(label.clone(), ei).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            let mut halves = [0; 2];
            for (slot, h) in halves.iter_mut().zip([a, b]) {
                let id = *by_label
                    .get(&h)
                    .ok_or_else(|| Error::UnknownHalfEdge(h.clone()))?;
                if half_edges[id].edge != usize::MAX {
                    return Err(Error::DuplicateHalfEdge(h));
                }
                half_edges[id].edge = ei;
                *slot = id;
            }
            edges.push(Edge {
                label,
                halves,
                sign,
            });
        }
        if let Some(h) = half_edges.iter().find(|h| h.edge == usize::MAX) {
            return Err(Error::UnpairedHalfEdge(h.label.clone()));
        }
        Ok(RibbonGraph {
            vertices,
            edges,
            half_edges,
        })
    }
}

impl RibbonGraph {
    pub fn builder() -> RibbonGraphBuilder {
        RibbonGraphBuilder::default()
    }

    /// The graph with `n` vertices and no edges.
    pub fn isolated(n: usize) -> RibbonGraph {
        let mut b = RibbonGraph::builder();
        for i in 0..n {
            b = b.vertex(alloc::format!("v{}", i + 1), Vec::<String>::new());
        }
        b.build().expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v].label
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.edges[e].label
    }

    pub fn half_edge_label(&self, h: usize) -> &str {
        &self.half_edges[h].label
    }

    /// Half-edge ids around vertex `v`, in cyclic order as declared.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.vertices[v].rotation
    }

    pub fn halves(&self, e: usize) -> [usize; 2] {
        self.edges[e].halves
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.edges[e].sign
    }

    pub fn half_edge_vertex(&self, h: usize) -> usize {
        self.half_edges[h].vertex
    }

    pub fn half_edge_edge(&self, h: usize) -> usize {
        self.half_edges[h].edge
    }

    /// The other half-edge of the same edge.
    pub fn partner(&self, h: usize) -> usize {
        let [a, b] = self.edges[self.half_edges[h].edge].halves;
        if a == h {
            b
        } else {
            a
        }
    }

    /// Endpoint vertices of edge `e`, in half-edge order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e].halves;
        (self.half_edges[a].vertex, self.half_edges[b].vertex)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Edge set from labels.
    pub fn edge_set<'a, I>(&self, labels: I) -> Result<EdgeSet, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels.into_iter().try_fold(EdgeSet::EMPTY, |s, l| {
            self.edge_index(l)
                .map(|e| s.with(e))
                .ok_or_else(|| Error::UnknownEdge(l.to_string()))
        })
    }

    /// Underlying abstract multigraph, edge indices preserved.
    pub fn underlying(&self) -> OrdinaryGraph {
        OrdinaryGraph::new(
            self.vertex_count(),
            (0..self.edge_count()).map(|e| self.endpoints(e)).collect(),
        )
    }

    pub fn subgraph(&self, edges: EdgeSet) -> SpanningSubgraph<'_> {
        SpanningSubgraph::new(self, edges)
    }

    pub fn full(&self) -> SpanningSubgraph<'_> {
        self.subgraph(self.all_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.full().components() <= 1
    }

    /// The ribbon subgraph with edge set `edges` as a graph in its own right.
    /// All vertices are kept; kept edges are renumbered in increasing order.
    pub fn restrict(&self, edges: EdgeSet) -> RibbonGraph {
        let mut b = RibbonGraph::builder();
        for v in &self.vertices {
            b = b.vertex(
                v.label.clone(),
                v.rotation
                    .iter()
                    .filter(|&&h| edges.contains(self.half_edges[h].edge))
                    .map(|&h| self.half_edges[h].label.clone()),
            );
        }
        for e in edges.iter() {
            let edge = &self.edges[e];
            b = b.edge(
                edge.label.clone(),
                self.half_edges[edge.halves[0]].label.clone(),
                self.half_edges[edge.halves[1]].label.clone(),
                edge.sign,
            );
        }
        b.build().expect("restriction of a valid graph is valid")
    }

    /// Splits into connected components. Each entry is the component graph
    /// together with the original indices of its edges (in its edge order).
    pub fn connected_components(&self) -> Vec<(RibbonGraph, Vec<usize>)> {
        let mut uf = crate::graph::DisjointSets::new(self.vertex_count());
        for e in 0..self.edge_count() {
            let (a, b) = self.endpoints(e);
            uf.union(a, b);
        }
        let comp = uf.labels();
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|c| {
                let mut b = RibbonGraph::builder();
                for (vi, v) in self.vertices.iter().enumerate() {
                    if comp[vi] == c {
                        b = b.vertex(
                            v.label.clone(),
                            v.rotation.iter().map(|&h| self.half_edges[h].label.clone()),
                        );
                    }
                }
                let mut kept = Vec::new();
                for (ei, edge) in self.edges.iter().enumerate() {
                    if comp[self.endpoints(ei).0] == c {
                        kept.push(ei);
                        b = b.edge(
                            edge.label.clone(),
                            self.half_edges[edge.halves[0]].label.clone(),
                            self.half_edges[edge.halves[1]].label.clone(),
                            edge.sign,
                        );
                    }
                }
                (
                    b.build().expect("component of a valid graph is valid"),
                    kept,
                )
            })
            .collect()
    }

    /// The partial dual with respect to the edge set `h`. Edge labels and
    /// edge order are kept.
    pub fn partial_dual(&self, h: EdgeSet) -> RibbonGraph {
        flags::partial_dual(self, h)
    }

    /// The Poincaré dual: one vertex per boundary component, one crossing
    /// edge per edge (same label, same index).
    pub fn dual(&self) -> RibbonGraph {
        self.partial_dual(self.all_edges())
    }

    /// Orientability of the whole ribbon graph.
    pub fn is_orientable(&self) -> bool {
        self.full().is_orientable()
    }

    /// Label pieces for serialization: `(label, rotation labels)` per vertex.
    pub fn vertex_records(&self) -> impl Iterator<Item = (&str, Vec<&str>)> + '_ {
        self.vertices.iter().map(move |v| {
            (
                v.label.as_str(),
                v.rotation
                    .iter()
                    .map(|&h| self.half_edges[h].label.as_str())
                    .collect(),
            )
        })
    }

    /// `(label, half-edge a, half-edge b, sign)` per edge.
    pub fn edge_records(&self) -> impl Iterator<Item = (&str, &str, &str, Sign)> + '_ {
        self.edges.iter().map(move |e| {
            (
                e.label.as_str(),
                self.half_edges[e.halves[0]].label.as_str(),
                self.half_edges[e.halves[1]].label.as_str(),
                e.sign,
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn builder_rejects_malformed_input() {
        let dup = RibbonGraph::builder()
            .vertex("v", ["a", "b"])
            .edge("e", "a", "b", Sign::Plus)
            .edge("f", "a", "b", Sign::Plus)
            .build();
        assert_eq!(dup, Err(Error::DuplicateHalfEdge("a".into())));

        let unpaired = RibbonGraph::builder().vertex("v", ["a", "b"]).build();
        assert_eq!(unpaired, Err(Error::UnpairedHalfEdge("a".into())));

        let unknown = RibbonGraph::builder()
            .vertex("v", ["a"])
            .edge("e", "a", "z", Sign::Plus)
            .build();
        assert_eq!(unknown, Err(Error::UnknownHalfEdge("z".into())));

        let twice = RibbonGraph::builder().vertex("v", ["a", "a"]).build();
        assert_eq!(twice, Err(Error::DuplicateHalfEdge("a".into())));

        let dup_vertex = RibbonGraph::builder()
            .vertex("v", ["a"])
            .vertex("v", ["b"])
            .build();
        assert_eq!(dup_vertex, Err(Error::DuplicateLabel("v".into())));
    }

    #[test]
    fn accessors_on_theta() {
        let th = fixtures::theta();
        assert_eq!(th.vertex_count(), 2);
        assert_eq!(th.edge_count(), 3);
        assert_eq!(th.half_edge_count(), 6);
        for e in 0..3 {
            assert!(!th.is_loop(e));
            let [a, b] = th.halves(e);
            assert_eq!(th.partner(a), b);
            assert_eq!(th.half_edge_edge(b), e);
        }
        assert_eq!(th.edge_set(["e1", "e3"]), Ok(EdgeSet(0b101)));
        assert!(th.edge_set(["nope"]).is_err());
    }

    #[test]
    fn restrict_and_components() {
        let th = fixtures::theta();
        let r = th.restrict(EdgeSet(0b010));
        assert_eq!(r.edge_count(), 1);
        assert_eq!(r.edge_label(0), "e2");
        assert_eq!(r.vertex_count(), 2);

        let two = r.restrict(EdgeSet::EMPTY);
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps
            .iter()
            .all(|(g, kept)| g.vertex_count() == 1 && kept.is_empty()));
    }
}
