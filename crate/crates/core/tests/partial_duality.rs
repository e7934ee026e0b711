mod common;

use proptest::prelude::*;
use qp_core::identities::{find, Outcome};
use qp_core::{fixtures, EdgeSet, EmbeddedGraph, RibbonGraph};

fn passes(name: &str, g: RibbonGraph) {
    let e = EmbeddedGraph::cellular(g);
    let outcome = find(name).unwrap().run(&e, &[]);
    assert_eq!(outcome, Outcome::Pass, "{name}");
}

#[test]
fn duals_of_fixtures() {
    let th = fixtures::theta().dual();
    assert_eq!((th.vertex_count(), th.edge_count()), (3, 3));
    assert!(th.is_orientable());
    // the dual of the planar theta graph is a triangle
    let u = th.underlying();
    assert!((0..3).all(|e| !u.is_loop(e)));
    assert_eq!(u.components(u.all_edges()), 1);

    let m1 = fixtures::m1().dual();
    assert_eq!(m1.vertex_count(), 1);
    assert!(!m1.is_orientable());

    let b1 = fixtures::b1().dual();
    assert_eq!((b1.vertex_count(), b1.edge_count()), (2, 1));
    assert!(!b1.is_loop(0));

    assert_eq!(fixtures::t1().dual().vertex_count(), 1);
}

#[test]
fn partial_dual_of_one_loop() {
    let t1 = fixtures::t1();
    let d = t1.partial_dual(EdgeSet(0b01));
    assert_eq!(
        d.vertex_count(),
        t1.subgraph(EdgeSet(0b01)).boundary_components()
    );
    assert!(d.partial_dual(EdgeSet(0b01)).is_equivalent(&t1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partial_duality_properties(g in common::ribbon_graph(4, 4, true)) {
        passes("partial-duality", g);
    }

    #[test]
    fn partial_dual_components_hold(g in common::ribbon_graph(4, 4, true)) {
        passes("partial-dual-components", g);
    }

    #[test]
    fn surface_invariants_hold(g in common::ribbon_graph(5, 4, true)) {
        passes("surface-invariants", g);
    }

    #[test]
    fn minors_count_correctly(g in common::ribbon_graph(5, 4, true)) {
        passes("minor-counts", g);
    }

    #[test]
    fn dual_is_an_involution(g in common::ribbon_graph(5, 5, true)) {
        prop_assert!(g.dual().dual().is_equivalent(&g));
        prop_assert_eq!(g.dual().vertex_count(), g.full().boundary_components());
    }

    #[test]
    fn equivalence_ignores_flips(g in common::ribbon_graph(4, 4, true), v in 0usize..4) {
        let v = v % g.vertex_count();
        prop_assert!(g.flip_vertex(v).is_equivalent(&g));
    }
}
