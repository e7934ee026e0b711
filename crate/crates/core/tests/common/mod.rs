#![allow(dead_code)]

use proptest::prelude::*;
use qp_core::{EdgeOrder, EdgeSet, EmbeddedGraph, RibbonGraph, Sign};

/// Builds a connected ribbon graph from raw choices: a spanning tree where
/// vertex `i` hangs off an earlier vertex, then extra edges, with every
/// half-edge inserted at a chosen position in its rotation.
pub fn build(v: usize, extra: usize, picks: &[u32], twists: &[bool]) -> RibbonGraph {
    let mut pick = picks.iter().copied().cycle();
    let mut next = |n: usize| pick.next().unwrap() as usize % n;
    let mut rot: Vec<Vec<String>> = vec![Vec::new(); v];
    let mut ends = Vec::new();
    for i in 1..v {
        ends.push((next(i), i));
    }
    for _ in 0..extra {
        ends.push((next(v), next(v)));
    }
    let mut b = RibbonGraph::builder();
    let mut edges = Vec::new();
    for (k, &(a, c)) in ends.iter().enumerate() {
        let (ha, hc) = (format!("h{k}a"), format!("h{k}b"));
        let pa = next(rot[a].len() + 1);
        rot[a].insert(pa, ha.clone());
        let pc = next(rot[c].len() + 1);
        rot[c].insert(pc, hc.clone());
        let sign = Sign::from_twisted(twists[k % twists.len()]);
        edges.push((format!("e{}", k + 1), ha, hc, sign));
    }
    for (i, r) in rot.into_iter().enumerate() {
        b = b.vertex(format!("v{}", i + 1), r);
    }
    for (l, x, y, s) in edges {
        b = b.edge(l, x, y, s);
    }
    b.build().unwrap()
}

prop_compose! {
    pub fn ribbon_graph(max_v: usize, max_extra: usize, twist: bool)
        (v in 1..=max_v, extra in 0..=max_extra,
         picks in prop::collection::vec(any::<u32>(), 32),
         twists in prop::collection::vec(any::<bool>(), 12))
        -> RibbonGraph
    {
        let twists: Vec<bool> = twists.into_iter().map(|t| t && twist).collect();
        build(v, extra, &picks, &twists)
    }
}

prop_compose! {
    /// A graph together with a random edge order.
    pub fn ordered(max_v: usize, max_extra: usize)
        (g in ribbon_graph(max_v, max_extra, true))
        (perm in Just((0..g.edge_count()).collect::<Vec<_>>()).prop_shuffle(), g in Just(g))
        -> (RibbonGraph, EdgeOrder)
    {
        (g, EdgeOrder::new(perm).unwrap())
    }
}

prop_compose! {
    /// A cellulation with an arbitrary marked subset.
    pub fn marked(max_v: usize, max_extra: usize)
        (g in ribbon_graph(max_v, max_extra, true), mask in any::<u64>())
        -> EmbeddedGraph
    {
        let m = EdgeSet(mask).intersection(g.all_edges());
        EmbeddedGraph::new(g, m).unwrap()
    }
}
