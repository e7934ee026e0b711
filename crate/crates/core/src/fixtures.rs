//! Small named ribbon graphs used throughout the tests and the CLI.
//!
//! * `B1`: one vertex, one untwisted loop (annulus; sphere when capped).
//! * `M1`: one vertex, one twisted loop (Möbius band; projective plane).
//! * `T1`: one vertex, two interleaved untwisted loops (torus).
//! * `P2`: one vertex, two non-interleaved untwisted loops (sphere).
//! * `TH`: theta graph, two vertices and three parallel edges on the sphere.

use alloc::vec;
use alloc::vec::Vec;

use crate::{RibbonGraph, Sign};

pub fn b1() -> RibbonGraph {
    RibbonGraph::builder()
        .vertex("v", ["a1", "a2"])
        .edge("e1", "a1", "a2", Sign::Plus)
        .build()
        .unwrap()
}

pub fn m1() -> RibbonGraph {
    RibbonGraph::builder()
        .vertex("v", ["a1", "a2"])
        .edge("e1", "a1", "a2", Sign::Minus)
        .build()
        .unwrap()
}

pub fn t1() -> RibbonGraph {
    RibbonGraph::builder()
        .vertex("v", ["a1", "b1", "a2", "b2"])
        .edge("ea", "a1", "a2", Sign::Plus)
        .edge("eb", "b1", "b2", Sign::Plus)
        .build()
        .unwrap()
}

pub fn p2() -> RibbonGraph {
    RibbonGraph::builder()
        .vertex("v", ["a1", "a2", "b1", "b2"])
        .edge("ea", "a1", "a2", Sign::Plus)
        .edge("eb", "b1", "b2", Sign::Plus)
        .build()
        .unwrap()
}

pub fn theta() -> RibbonGraph {
    RibbonGraph::builder()
        .vertex("u", ["x1", "y1", "z1"])
        .vertex("w", ["z2", "y2", "x2"])
        .edge("e1", "x1", "x2", Sign::Plus)
        .edge("e2", "y1", "y2", Sign::Plus)
        .edge("e3", "z1", "z2", Sign::Plus)
        .build()
        .unwrap()
}

/// One vertex, no edges.
pub fn point() -> RibbonGraph {
    RibbonGraph::isolated(1)
}

/// `(name, graph)` for every fixture.
pub fn named() -> Vec<(&'static str, RibbonGraph)> {
    vec![
        ("B1", b1()),
        ("M1", m1()),
        ("T1", t1()),
        ("P2", p2()),
        ("TH", theta()),
        ("PT", point()),
    ]
}

pub fn all() -> Vec<RibbonGraph> {
    named().into_iter().map(|(_, g)| g).collect()
}
