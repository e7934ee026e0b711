use alloc::vec::Vec;

use super::{activities, quasi_trees, ActivityPartition, EdgeOrder};
use crate::graph_polys::{specialize, tutte, PolyKind, SpecializeContext};
use crate::poly::{HalfExp, LaurentPoly, Substitution, Var};
use crate::{EmbeddedGraph, Error, OrdinaryGraph, RibbonGraph};

/// `G_Q` and `G*_{Q*}` for one quasi-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorGraphs {
    /// Vertices: components of `F_VI` in `G`; edges: `I_o`.
    pub g_q: OrdinaryGraph,
    /// Original edge index of each edge of `g_q`.
    pub g_q_edges: Vec<usize>,
    /// Vertices: components of `R_VE` in `G*`; edges: `E_o`.
    pub dual_q: OrdinaryGraph,
    pub dual_q_edges: Vec<usize>,
}

pub fn build_minor_graphs(
    g: &RibbonGraph,
    g_star: &RibbonGraph,
    part: &ActivityPartition,
) -> MinorGraphs {
    MinorGraphs {
        g_q: g.underlying().quotient(part.vi(), part.i_o),
        g_q_edges: part.i_o.iter().collect(),
        dual_q: g_star.underlying().quotient(part.ve(), part.e_o),
        dual_q_edges: part.e_o.iter().collect(),
    }
}

/// `T(u, v)` with `u` and `v` substituted for the two Tutte variables.
fn tutte_at(g: &OrdinaryGraph, u: LaurentPoly, v: LaurentPoly) -> LaurentPoly {
    let s = Substitution::new().bind(Var::X, u).bind(Var::Y, v);
    tutte(g)
        .substitute(&s)
        .expect("tutte polynomials are polynomials")
}

fn tutte_xv(g: &OrdinaryGraph, v: LaurentPoly) -> LaurentPoly {
    tutte_at(g, LaurentPoly::var(Var::X), v)
}

fn tutte_yv(g: &OrdinaryGraph, v: LaurentPoly) -> LaurentPoly {
    tutte_at(g, LaurentPoly::var(Var::Y), v)
}

fn each_quasi_tree<F>(g: &RibbonGraph, ord: &EdgeOrder, mut term: F) -> Result<LaurentPoly, Error>
where
    F: FnMut(&ActivityPartition) -> LaurentPoly,
{
    let mut out = LaurentPoly::zero();
    for q in quasi_trees(g)? {
        out += term(&activities(g, ord, q)?);
    }
    Ok(out)
}

fn cellular_graph(e: &EmbeddedGraph) -> Result<&RibbonGraph, Error> {
    if e.is_cellular() {
        Ok(e.cellulation())
    } else {
        Err(Error::NotCellular)
    }
}

/// `Σ_Q T_{G_Q}(X, A) T_{G*_{Q*}}(Y, B) A^(s(F_VI)/2) B^(s(R_VE)/2)`.
pub fn expansion_krushkal(e: &EmbeddedGraph, ord: &EdgeOrder) -> Result<LaurentPoly, Error> {
    let g = cellular_graph(e)?;
    let g_star = e.cellulation_dual();
    each_quasi_tree(g, ord, |part| {
        let m = build_minor_graphs(g, g_star, part);
        let s_vi = g.subgraph(part.vi()).genus_s();
        let s_ve = g_star.subgraph(part.ve()).genus_s();
        let t = tutte_xv(&m.g_q, LaurentPoly::var(Var::A));
        let t_star = tutte_yv(&m.dual_q, LaurentPoly::var(Var::B));
        (&t * &t_star)
            .shift(Var::A, HalfExp::from_doubled(s_vi as i64))
            .shift(Var::B, HalfExp::from_doubled(s_ve as i64))
    })
}

/// `Σ_Q Y^(n(F_VI)) Z^(s(F_VI)) (1 + Y)^|E_o| T_{G_Q}(X, Y Z^2)`.
pub fn expansion_br(g: &RibbonGraph, ord: &EdgeOrder) -> Result<LaurentPoly, Error> {
    let u = g.underlying();
    let one_plus_y = LaurentPoly::one() + LaurentPoly::var(Var::Y);
    each_quasi_tree(g, ord, |part| {
        let vi = g.subgraph(part.vi());
        let g_q = u.quotient(part.vi(), part.i_o);
        let t = tutte_xv(&g_q, LaurentPoly::term(1, [0, 2, 0, 0, 4]));
        (&t * &one_plus_y.pow(part.e_o.len() as u32))
            .shift(Var::Y, HalfExp::from_int(vi.nullity() as i64))
            .shift(Var::Z, HalfExp::from_int(vi.genus_s() as i64))
    })
}

/// `Σ_Q T_{G_Q}(X-1, Z^-1) T_{G*_{Q*}}(Y-1, Z) Z^(n(R_VE) + n(G_Q))`.
///
/// `T` here is the same normalization as [`tutte`], so the first arguments
/// carry the `-1` shift that the Las Vergnas variables need. The exponent of
/// `Z` is `δ/2 - s(F_VI)/2 + s(R_VE)/2` rewritten with
/// `s(F_{VI ∪ I_o ∪ E_o}) = s(F_VI) + 2n(G_Q)`.
pub fn expansion_lv(e: &EmbeddedGraph, ord: &EdgeOrder) -> Result<LaurentPoly, Error> {
    let g = cellular_graph(e)?;
    let g_star = e.cellulation_dual();
    let z_inv = LaurentPoly::monomial(Var::Z, HalfExp::from_int(-1));
    let x1 = LaurentPoly::var(Var::X) - LaurentPoly::one();
    let y1 = LaurentPoly::var(Var::Y) - LaurentPoly::one();
    each_quasi_tree(g, ord, |part| {
        let m = build_minor_graphs(g, g_star, part);
        let n_ve = g_star.subgraph(part.ve()).nullity() as i64;
        let n_gq = m.g_q.nullity(m.g_q.all_edges()) as i64;
        let t = tutte_at(&m.g_q, x1.clone(), z_inv.clone());
        let t_star = tutte_at(&m.dual_q, y1.clone(), LaurentPoly::var(Var::Z));
        (&t * &t_star).shift(Var::Z, HalfExp::from_int(n_ve + n_gq))
    })
}

/// Any of the four polynomials through quasi-tree expansions, one connected
/// component at a time (the polynomials multiply over disjoint unions).
///
/// Krushkal and Las Vergnas need a cellular embedding. Tutte and
/// Bollobás–Riordan only see the marked ribbon subgraph, so they are
/// expanded on that subgraph regarded as a cellulation of its own surface.
pub fn expand(e: &EmbeddedGraph, kind: PolyKind, ord: &EdgeOrder) -> Result<LaurentPoly, Error> {
    ord.check(e.cellulation())?;
    let (base, ord) = match kind {
        PolyKind::Krushkal | PolyKind::LasVergnas => {
            cellular_graph(e)?;
            (e.clone(), ord.clone())
        }
        PolyKind::Tutte | PolyKind::BollobasRiordan => {
            let kept: Vec<usize> = e.marked().iter().collect();
            (
                EmbeddedGraph::cellular(e.marked_ribbon()),
                ord.restrict(&kept),
            )
        }
    };
    let mut out = LaurentPoly::one();
    for (g, kept) in base.cellulation().connected_components() {
        let part = EmbeddedGraph::cellular(g);
        let ord = ord.restrict(&kept);
        let p = match kind {
            PolyKind::Krushkal => expansion_krushkal(&part, &ord)?,
            PolyKind::LasVergnas => expansion_lv(&part, &ord)?,
            PolyKind::BollobasRiordan => expansion_br(part.cellulation(), &ord)?,
            PolyKind::Tutte => specialize(
                &expansion_krushkal(&part, &ord)?,
                PolyKind::Tutte,
                SpecializeContext::of(&part),
            )?,
        };
        out = &out * &p;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph_polys::{bollobas_riordan, krushkal, las_vergnas};
    use crate::poly::p;
    use crate::EdgeSet;

    fn id(g: &RibbonGraph) -> EdgeOrder {
        EdgeOrder::identity(g.edge_count())
    }

    #[test]
    fn expansion_examples() {
        let t1 = EmbeddedGraph::cellular(fixtures::t1());
        let ord = id(t1.cellulation());
        assert_eq!(expansion_krushkal(&t1, &ord).unwrap(), p("A + B + 2"));
        assert_eq!(
            expansion_br(t1.cellulation(), &ord).unwrap(),
            p("1 + 2*Y + Y^2*Z^2")
        );
        let th = EmbeddedGraph::cellular(fixtures::theta());
        assert_eq!(
            expansion_lv(&th, &id(th.cellulation())).unwrap(),
            las_vergnas(&th).unwrap()
        );
    }

    #[test]
    fn expansions_match_definitions_on_fixtures() {
        for g in fixtures::all() {
            let e = EmbeddedGraph::cellular(g.clone());
            let ord = id(&g);
            assert_eq!(expansion_krushkal(&e, &ord).unwrap(), krushkal(&e), "{g:?}");
            assert_eq!(expansion_br(&g, &ord).unwrap(), bollobas_riordan(&g));
            assert_eq!(expansion_lv(&e, &ord).unwrap(), las_vergnas(&e).unwrap());
        }
    }

    #[test]
    fn expansion_inputs_are_checked() {
        let partial = EmbeddedGraph::new(fixtures::theta(), EdgeSet(0b01)).unwrap();
        let ord = EdgeOrder::identity(3);
        assert_eq!(expansion_krushkal(&partial, &ord), Err(Error::NotCellular));
        assert_eq!(expansion_lv(&partial, &ord), Err(Error::NotCellular));
        let two = RibbonGraph::isolated(2);
        assert_eq!(
            expansion_br(&two, &EdgeOrder::identity(0)),
            Err(Error::Disconnected)
        );
        assert_eq!(
            expansion_br(&fixtures::t1(), &EdgeOrder::identity(3)),
            Err(Error::BadOrder(2))
        );
    }

    #[test]
    fn expand_handles_components_and_marking() {
        use crate::graph_polys::brute_force;
        let g = fixtures::theta().disjoint_union(&fixtures::t1()).unwrap();
        let ord = EdgeOrder::new(alloc::vec![4, 0, 3, 2, 1]).unwrap();
        let e = EmbeddedGraph::cellular(g.clone());
        for kind in PolyKind::ALL {
            assert_eq!(
                expand(&e, kind, &ord).unwrap(),
                brute_force(&e, kind).unwrap(),
                "{kind}"
            );
        }
        let partial = EmbeddedGraph::new(g, EdgeSet(0b10110)).unwrap();
        for kind in [PolyKind::Tutte, PolyKind::BollobasRiordan] {
            assert_eq!(
                expand(&partial, kind, &ord).unwrap(),
                brute_force(&partial, kind).unwrap()
            );
        }
        assert_eq!(
            expand(&partial, PolyKind::LasVergnas, &ord),
            Err(Error::NotCellular)
        );
    }

    #[test]
    fn t1_minor_graphs() {
        let t1 = fixtures::t1();
        let part = activities(&t1, &id(&t1), EdgeSet(0b11)).unwrap();
        let m = build_minor_graphs(&t1, &t1.dual(), &part);
        assert_eq!(m.g_q, OrdinaryGraph::new(1, alloc::vec![(0, 0)]));
        assert_eq!(m.g_q_edges, [0]);
        assert_eq!(m.dual_q.edge_count(), 0);
    }
}
