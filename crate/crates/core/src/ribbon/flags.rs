//! Flag-level view of a ribbon graph.
//!
//! Each half-edge `h` carries two flags, `2h` (the side facing the previous
//! half-edge in the rotation) and `2h + 1` (the side facing the next one).
//! Three fixed-point-free involutions act on flags:
//!
//! * `tau0` runs along the edge ribbon to the partner half-edge, staying on
//!   the same boundary line; the side bit is kept across a twisted edge and
//!   swapped across an untwisted one;
//! * `tau1` crosses a vertex corner to the neighbouring half-edge;
//! * `tau2` crosses the edge to its other side at the same end.
//!
//! Boundary components of a spanning subgraph are the orbits of
//! `<tau0, tau1>` (with corners taken in the subgraph), plus one per vertex
//! carrying no edge of the subgraph. The partial dual along `H` swaps the roles
//! of `tau0` and `tau2` on the flags of edges in `H`; its vertices are then the
//! orbits of `<tau1, tau2'>`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{RibbonGraph, Sign};
use crate::EdgeSet;

#[inline]
fn tau0(g: &RibbonGraph, f: usize) -> usize {
    let h = f >> 1;
    let side = f & 1;
    let p = g.partner(h);
    if g.sign(g.half_edge_edge(h)).is_twisted() {
        2 * p + side
    } else {
        2 * p + (1 - side)
    }
}

/// Corner involution of the spanning subgraph on `edges`, as a flag table.
/// Entries for flags of absent edges are `usize::MAX`.
fn corner_table(g: &RibbonGraph, edges: EdgeSet) -> Vec<usize> {
    let mut t1 = vec![usize::MAX; 2 * g.half_edge_count()];
    let mut kept = Vec::new();
    for v in 0..g.vertex_count() {
        kept.clear();
        kept.extend(
            g.rotation(v)
                .iter()
                .copied()
                .filter(|&h| edges.contains(g.half_edge_edge(h))),
        );
        let d = kept.len();
        for i in 0..d {
            let h = kept[i];
            let next = kept[(i + 1) % d];
            t1[2 * h + 1] = 2 * next;
            t1[2 * next] = 2 * h + 1;
        }
    }
    t1
}

/// `[tau0, tau1, tau2]` of the whole graph as flag tables.
pub(super) fn involutions(g: &RibbonGraph) -> [Vec<usize>; 3] {
    let n = 2 * g.half_edge_count();
    [
        (0..n).map(|f| tau0(g, f)).collect(),
        corner_table(g, g.all_edges()),
        (0..n).map(|f| f ^ 1).collect(),
    ]
}

/// Number of boundary components of the ribbon neighbourhood of the spanning
/// subgraph on `edges`.
pub(super) fn boundary_components(g: &RibbonGraph, edges: EdgeSet) -> usize {
    let t1 = corner_table(g, edges);
    let mut seen = vec![false; t1.len()];
    let mut count = 0;
    for v in 0..g.vertex_count() {
        let mut bare = true;
        for &h in g.rotation(v) {
            if !edges.contains(g.half_edge_edge(h)) {
                continue;
            }
            bare = false;
            for start in [2 * h, 2 * h + 1] {
                if seen[start] {
                    continue;
                }
                count += 1;
                // orbit of two involutions: alternate until we close up
                let mut f = start;
                loop {
                    seen[f] = true;
                    let a = tau0(g, f);
                    seen[a] = true;
                    f = t1[a];
                    if f == start {
                        break;
                    }
                }
            }
        }
        if bare {
            count += 1;
        }
    }
    count
}

pub(super) fn partial_dual(g: &RibbonGraph, h_set: EdgeSet) -> RibbonGraph {
    let nflags = 2 * g.half_edge_count();
    let t1 = corner_table(g, g.all_edges());
    let in_h = |f: usize| h_set.contains(g.half_edge_edge(f >> 1));
    let new_t2 = |f: usize| if in_h(f) { tau0(g, f) } else { f ^ 1 };
    let new_t0 = |f: usize| if in_h(f) { f ^ 1 } else { tau0(g, f) };

    // Label of the new end containing flag `f`. Ends of edges outside H are
    // the old half-edges; an edge in H with halves [p, q] gets the end through
    // flag 2p labelled p and the other end labelled q.
    let end_label = |f: usize| -> usize {
        let e = g.half_edge_edge(f >> 1);
        if !h_set.contains(e) {
            return f >> 1;
        }
        let [p, q] = g.halves(e);
        if f == 2 * p || f == tau0(g, 2 * p) {
            p
        } else {
            q
        }
    };

    // (new vertex, flag on the "previous" side) for each new half-edge,
    // identified by the old half-edge whose label it inherits.
    let mut side0 = vec![usize::MAX; g.half_edge_count()];
    let mut flag_vertex = vec![usize::MAX; nflags];
    let mut new_vertices: Vec<(Option<usize>, Vec<usize>)> = Vec::new();

    for v in 0..g.vertex_count() {
        if g.rotation(v).is_empty() {
            new_vertices.push((Some(v), Vec::new()));
            continue;
        }
        for &h in g.rotation(v) {
            for start in [2 * h, 2 * h + 1] {
                if flag_vertex[start] != usize::MAX {
                    continue;
                }
                let id = new_vertices.len();
                let mut rotation = Vec::new();
                let mut f = start;
                loop {
                    let other = new_t2(f);
                    flag_vertex[f] = id;
                    flag_vertex[other] = id;
                    let label = end_label(f);
                    side0[label] = f;
                    rotation.push(label);
                    f = t1[other];
                    if f == start {
                        break;
                    }
                }
                // keep the old label when the orbit is exactly an old vertex
                let old = g.half_edge_vertex(start >> 1);
                let same = 2 * rotation.len() == 2 * g.rotation(old).len()
                    && rotation.iter().all(|&x| {
                        g.half_edge_vertex(side0[x] >> 1) == old
                            && g.half_edge_vertex(new_t2(side0[x]) >> 1) == old
                    });
                new_vertices.push((same.then_some(old), rotation));
            }
        }
    }

    let reused: BTreeSet<&str> = new_vertices
        .iter()
        .filter_map(|(old, _)| old.map(|v| g.vertex_label(v)))
        .collect();
    let taken: BTreeSet<&str> = (0..g.vertex_count()).map(|v| g.vertex_label(v)).collect();
    let mut fresh = 0usize;
    let mut fresh_label = || -> String {
        loop {
            fresh += 1;
            let l = format!("f{fresh}");
            if !taken.contains(l.as_str()) && !reused.contains(l.as_str()) {
                return l;
            }
        }
    };

    let mut b = RibbonGraph::builder();
    for (old, rotation) in &new_vertices {
        let label = match old {
            Some(v) => String::from(g.vertex_label(*v)),
            None => fresh_label(),
        };
        b = b.vertex(label, rotation.iter().map(|&x| g.half_edge_label(x)));
    }
    for e in 0..g.edge_count() {
        let [p, q] = g.halves(e);
        let fp = side0[p];
        // untwisted iff running along the ribbon swaps the side bit
        let target = new_t0(fp);
        let q_side1 = target == new_t2(side0[q]);
        debug_assert!(q_side1 || target == side0[q]);
        let sign = if q_side1 { Sign::Plus } else { Sign::Minus };
        b = b.edge(
            g.edge_label(e),
            g.half_edge_label(p),
            g.half_edge_label(q),
            sign,
        );
    }
    b.build().expect("partial dual of a valid graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn flag_involutions_are_fixed_point_free() {
        for g in fixtures::all() {
            let t1 = corner_table(&g, g.all_edges());
            for f in 0..2 * g.half_edge_count() {
                let a = tau0(&g, f);
                assert_ne!(a, f);
                assert_eq!(tau0(&g, a), f);
                assert_eq!(t1[t1[f]], f);
            }
        }
    }

    #[test]
    fn empty_partial_dual_is_identity() {
        for g in fixtures::all() {
            assert_eq!(partial_dual(&g, EdgeSet::EMPTY), g);
        }
    }
}
