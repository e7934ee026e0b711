//! Files, random graphs and reports on top of [`qp_core`].

pub mod document;
pub mod random;
pub mod report;

pub use document::{parse, serialize, GraphDocument, ParseError};
pub use random::{random_graph, Draws, RandomGraphError};
