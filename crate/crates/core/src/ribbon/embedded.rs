use super::RibbonGraph;
use crate::{EdgeSet, Error};

/// A graph `G` embedded in a closed surface `Σ`, presented as a cellulation
/// `G̃` of `Σ` together with the subset of its edges that belong to `G`.
/// Both graphs share the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    cellulation: RibbonGraph,
    marked: EdgeSet,
    dual: RibbonGraph,
}

/// `(c(Σ), χ(Σ), δ)` with `δ = 2c(Σ) - χ(Σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub components: usize,
    pub euler: i64,
    pub delta: usize,
}

/// Invariants of the complement `Σ \ F` of a spanning subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementInvariants {
    /// `c(Σ \ F)`.
    pub complement_components: usize,
    /// `s⊥(F)`.
    pub s_perp: usize,
    /// `c(Σ \ F) - c(Σ)`.
    pub kernel_dim: usize,
}

impl EmbeddedGraph {
    pub fn new(cellulation: RibbonGraph, marked: EdgeSet) -> Result<Self, Error> {
        if !marked.is_subset(cellulation.all_edges()) {
            return Err(Error::EdgeSubsetOutOfRange);
        }
        let dual = cellulation.dual();
        Ok(Self {
            cellulation,
            marked,
            dual,
        })
    }

    /// The cellular embedding of `g` in the surface it fills.
    pub fn cellular(g: RibbonGraph) -> Self {
        let marked = g.all_edges();
        Self::new(g, marked).expect("all edges are in range")
    }

    pub fn cellulation(&self) -> &RibbonGraph {
        &self.cellulation
    }

    /// The Poincaré dual of the cellulation, edges indexed as in `G̃`.
    pub fn cellulation_dual(&self) -> &RibbonGraph {
        &self.dual
    }

    pub fn marked(&self) -> EdgeSet {
        self.marked
    }

    pub fn is_cellular(&self) -> bool {
        self.marked == self.cellulation.all_edges()
    }

    /// `c(G)`: components of the spanning subgraph on the marked edges.
    pub fn graph_components(&self) -> usize {
        self.cellulation.subgraph(self.marked).components()
    }

    /// The marked edges as a ribbon graph of their own (the regular
    /// neighbourhood of `G` in `Σ`).
    pub fn marked_ribbon(&self) -> RibbonGraph {
        self.cellulation.restrict(self.marked)
    }

    pub fn surface_invariants(&self) -> SurfaceInvariants {
        let full = self.cellulation.full();
        let components = full.components();
        let euler = self.cellulation.vertex_count() as i64 - self.cellulation.edge_count() as i64
            + full.boundary_components() as i64;
        let delta = 2 * components as i64 - euler;
        debug_assert!(delta >= 0);
        SurfaceInvariants {
            components,
            euler,
            delta: delta as usize,
        }
    }

    /// Complement invariants of the spanning subgraph `f ⊆ marked`, read off
    /// the dual subgraph `F*` on the edges of `G̃` not in `f`.
    pub fn complement_invariants(&self, f: EdgeSet) -> ComplementInvariants {
        assert!(
            f.is_subset(self.marked),
            "subgraph must use marked edges only"
        );
        let star = self
            .dual
            .subgraph(self.cellulation.all_edges().difference(f));
        let complement_components = star.components();
        ComplementInvariants {
            complement_components,
            s_perp: star.genus_s(),
            kernel_dim: complement_components - self.cellulation.full().components(),
        }
    }

    /// `G \ e`: the same cellulation with `e` no longer marked.
    pub fn unmark(&self, e: usize) -> EmbeddedGraph {
        Self {
            marked: self.marked.without(e),
            ..self.clone()
        }
    }

    /// `G / e`: contract the non-loop edge `e` in the cellulation. Marked
    /// edges keep their relative order.
    pub fn contract(&self, e: usize) -> Result<EmbeddedGraph, Error> {
        let g = self.cellulation.contract_edge(e)?;
        let low = EdgeSet::full(e);
        let marked = EdgeSet((self.marked.0 & low.0) | ((self.marked.0 >> 1) & !low.0));
        EmbeddedGraph::new(g, marked)
    }

    pub fn disjoint_union(&self, other: &EmbeddedGraph) -> Result<EmbeddedGraph, Error> {
        let g = self.cellulation.disjoint_union(&other.cellulation)?;
        let shift = self.cellulation.edge_count();
        EmbeddedGraph::new(g, EdgeSet(self.marked.0 | (other.marked.0 << shift)))
    }

    /// Restrict to the marked edges in every component and split by surface
    /// component. Each part keeps its own cellulation.
    pub fn surface_components(&self) -> alloc::vec::Vec<EmbeddedGraph> {
        self.cellulation
            .connected_components()
            .into_iter()
            .map(|(g, kept)| {
                let marked = kept
                    .iter()
                    .enumerate()
                    .filter(|(_, &old)| self.marked.contains(old))
                    .map(|(i, _)| i)
                    .collect();
                EmbeddedGraph::new(g, marked).expect("component edges are in range")
            })
            .collect()
    }
}
