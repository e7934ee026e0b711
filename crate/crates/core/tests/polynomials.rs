mod common;

use proptest::prelude::*;
use qp_core::graph_polys::{brute_force, krushkal, PolyKind};
use qp_core::identities::{find, Outcome};
use qp_core::quasitree::expand;
use qp_core::{fixtures, EdgeOrder, EdgeSet, EmbeddedGraph, LaurentPoly};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn check(name: &str, e: &EmbeddedGraph, orders: &[EdgeOrder]) {
    let outcome = find(name).unwrap().run(e, orders);
    assert!(
        matches!(outcome, Outcome::Pass | Outcome::Skip(_)),
        "{name}: {outcome:?}"
    );
}

#[test]
fn closed_forms() {
    let cell = |g| EmbeddedGraph::cellular(g);
    assert_eq!(krushkal(&cell(fixtures::m1())), p("A^(1/2) + B^(1/2)"));
    assert_eq!(krushkal(&cell(fixtures::t1())), p("A + B + 2"));
    assert_eq!(
        brute_force(&cell(fixtures::t1()), PolyKind::BollobasRiordan).unwrap(),
        p("1 + 2*Y + Y^2*Z^2")
    );
    assert_eq!(
        brute_force(&cell(fixtures::m1()), PolyKind::LasVergnas).unwrap(),
        p("1 + Z")
    );
}

#[test]
fn non_cellular_tutte() {
    // two of the three theta edges: a 2-cycle on the sphere
    let e = EmbeddedGraph::new(fixtures::theta(), EdgeSet(0b011)).unwrap();
    assert_eq!(brute_force(&e, PolyKind::Tutte).unwrap(), p("X + 2 + Y"));
    check("tutte", &e, &[EdgeOrder::identity(3)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn comb_and_minors(e in common::marked(4, 4)) {
        check("genus-sum", &e, &[]);
        check("deletion-contraction", &e, &[]);
    }

    #[test]
    fn tutte_on_marked_subgraphs(e in common::marked(4, 4)) {
        let n = e.cellulation().edge_count();
        check("tutte", &e, &[EdgeOrder::identity(n)]);
    }

    #[test]
    fn cellular_chains((g, ord) in common::ordered(4, 4)) {
        let e = EmbeddedGraph::cellular(g);
        for name in ["duality", "br", "lv", "krushkal-expansion"] {
            check(name, &e, std::slice::from_ref(&ord));
        }
    }

    #[test]
    fn expansions_do_not_depend_on_order((g, ord) in common::ordered(4, 4)) {
        let e = EmbeddedGraph::cellular(g);
        let id = EdgeOrder::identity(ord.len());
        for kind in PolyKind::ALL {
            prop_assert_eq!(expand(&e, kind, &ord).unwrap(), expand(&e, kind, &id).unwrap());
        }
    }
}
