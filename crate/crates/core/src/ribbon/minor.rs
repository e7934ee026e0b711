use alloc::string::String;
use alloc::vec::Vec;

use super::RibbonGraph;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorMode {
    Delete,
    Contract,
}

impl RibbonGraph {
    pub fn minor(&self, e: usize, mode: MinorMode) -> Result<RibbonGraph, Error> {
        match mode {
            MinorMode::Delete => Ok(self.delete_edge(e)),
            MinorMode::Contract => self.contract_edge(e),
        }
    }

    /// `G \ e`; remaining edges keep their relative order.
    pub fn delete_edge(&self, e: usize) -> RibbonGraph {
        assert!(e < self.edge_count(), "edge index out of range");
        self.restrict(self.all_edges().without(e))
    }

    /// Reverses the rotation at `v` and toggles the twist of every non-loop
    /// edge with an end there. The result has the same subgraph invariants.
    pub fn flip_vertex(&self, v: usize) -> RibbonGraph {
        let mut g = self.clone();
        g.vertices[v].rotation.reverse();
        for (pos, &h) in g.vertices[v].rotation.iter().enumerate() {
            g.half_edges[h].position = pos;
        }
        for e in 0..g.edges.len() {
            let (a, b) = g.endpoints(e);
            if (a == v) != (b == v) {
                g.edges[e].sign = g.edges[e].sign.flip();
            }
        }
        g
    }

    /// `G / e` for a non-loop edge: the two end rotations are spliced at `e`.
    /// The merged vertex keeps the label and position of the first endpoint.
    pub fn contract_edge(&self, e: usize) -> Result<RibbonGraph, Error> {
        assert!(e < self.edge_count(), "edge index out of range");
        if self.is_loop(e) {
            return Err(Error::ContractLoop(String::from(self.edge_label(e))));
        }
        let (u, w) = self.endpoints(e);
        let g = if self.sign(e).is_twisted() {
            self.flip_vertex(w)
        } else {
            self.clone()
        };
        let [hu, hw] = g.halves(e);
        // rotation at u after hu, then at w after hw, skipping e itself
        let after = |v: usize, h: usize| -> Vec<usize> {
            let rot = g.rotation(v);
            let i = g.half_edges[h].position;
            rot[i + 1..].iter().chain(&rot[..i]).copied().collect()
        };
        let merged: Vec<usize> = after(u, hu).into_iter().chain(after(w, hw)).collect();

        let mut b = RibbonGraph::builder();
        for (vi, v) in g.vertices.iter().enumerate() {
            if vi == w {
                continue;
            }
            let rot: Vec<usize> = if vi == u {
                merged.clone()
            } else {
                v.rotation.clone()
            };
            b = b.vertex(
                v.label.clone(),
                rot.iter().map(|&h| g.half_edges[h].label.clone()),
            );
        }
        for (ei, edge) in g.edges.iter().enumerate() {
            if ei == e {
                continue;
            }
            b = b.edge(
                edge.label.clone(),
                g.half_edges[edge.halves[0]].label.clone(),
                g.half_edges[edge.halves[1]].label.clone(),
                edge.sign,
            );
        }
        Ok(b.build().expect("contraction of a valid graph is valid"))
    }

    /// The same graph with every vertex, edge and half-edge label passed
    /// through `f`. `f` must be injective.
    pub fn relabeled<F: Fn(&str) -> String>(&self, f: F) -> RibbonGraph {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.label = f(&v.label);
        }
        for e in &mut g.edges {
            e.label = f(&e.label);
        }
        for h in &mut g.half_edges {
            h.label = f(&h.label);
        }
        g
    }

    /// `self ⊔ other`; vertices and edges of `other` come after those of
    /// `self`. Fails if the two graphs share a label.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> Result<RibbonGraph, Error> {
        let mut b = RibbonGraph::builder();
        for g in [self, other] {
            for (label, rot) in g.vertex_records() {
                b = b.vertex(label, rot);
            }
        }
        for g in [self, other] {
            for (label, x, y, sign) in g.edge_records() {
                b = b.edge(label, x, y, sign);
            }
        }
        b.build()
    }
}
