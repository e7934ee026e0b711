//! Exact polynomial invariants of graphs embedded in compact surfaces.
//!
//! The carrier for all topology is [`RibbonGraph`], a signed rotation system.
//! On top of it this crate computes
//!
//! * the generalized Krushkal polynomial of a (possibly non-cellular,
//!   possibly non-orientable) embedded graph, by summing over spanning
//!   subgraphs ([`graph_polys::krushkal`]);
//! * the Tutte, Bollobás–Riordan and Las Vergnas polynomials, both by
//!   definition and as specializations of the Krushkal polynomial;
//! * quasi-trees, their activities with respect to an edge order, the binary
//!   tree of partial resolutions, and the quasi-tree expansions of the three
//!   ribbon-graph polynomials ([`quasitree`]).
//!
//! Polynomials are exact: coefficients are big integers and exponents live on
//! the half-integer grid ([`LaurentPoly`]).
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is off.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod edgeset;
mod error;
pub mod fixtures;
pub mod graph;
pub mod graph_polys;
pub mod identities;
pub mod matroid;
pub mod poly;
pub mod quasitree;
pub mod ribbon;

pub use edgeset::EdgeSet;
pub use error::Error;
pub use graph::OrdinaryGraph;
pub use graph_polys::PolyKind;
pub use poly::{HalfExp, LaurentPoly, Var};
pub use quasitree::{ActivityPartition, EdgeOrder, ResolutionTree, VertexWord};
pub use ribbon::{EmbeddedGraph, RibbonGraph, Sign, SubgraphProfile};

/// Largest number of edges any graph may carry; edge subsets are `u64` masks.
pub const MAX_EDGES: usize = 64;
