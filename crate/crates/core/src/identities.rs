//! A suite of identities that tie the pieces of the library together, each
//! checked exhaustively on one embedded graph and a list of edge orders.
//!
//! Every check returns the first counterexample it finds. Checks that only
//! make sense for cellular embeddings report [`Outcome::Skip`] otherwise.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph_polys::{
    bollobas_riordan, krushkal, las_vergnas, specialize, tutte, PolyKind, SpecializeContext,
};
use crate::quasitree::{
    activities, build_minor_graphs, expand, quasi_trees, resolution_tree, QuasiTreePartition,
};
use crate::{fixtures, EdgeOrder, EdgeSet, EmbeddedGraph, LaurentPoly, RibbonGraph, Var};

/// Graphs with more edges than this are skipped: every check is exponential.
pub const EDGE_LIMIT: usize = 12;

/// Pairs `(H, H')` are all tried for composition of partial duals up to this
/// many edges; beyond it `H'` ranges over single edges, which generate the rest.
const PAIR_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(&'static str),
    Fail(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Skip(_) => "SKIP",
            Outcome::Fail(_) => "FAIL",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Needs {
    Nothing,
    Cellular,
}

type Check = fn(&EmbeddedGraph, &[EdgeOrder]) -> Result<(), String>;

pub struct Identity {
    pub name: &'static str,
    needs: Needs,
    check: Check,
}

impl Identity {
    pub fn run(&self, e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Outcome {
        if e.cellulation().edge_count() > EDGE_LIMIT {
            return Outcome::Skip("too many edges for exhaustive checks");
        }
        if self.needs == Needs::Cellular && !e.is_cellular() {
            return Outcome::Skip("needs a cellular embedding");
        }
        match (self.check)(e, orders) {
            Ok(()) => Outcome::Pass,
            Err(msg) => Outcome::Fail(msg),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub const SUITE: &[Identity] = &[
    Identity {
        name: "surface-invariants",
        needs: Needs::Nothing,
        check: surface_invariants,
    },
    Identity {
        name: "partial-duality",
        needs: Needs::Nothing,
        check: partial_duality,
    },
    Identity {
        name: "partial-dual-components",
        needs: Needs::Nothing,
        check: partial_dual_components,
    },
    Identity {
        name: "minor-counts",
        needs: Needs::Nothing,
        check: minor_counts,
    },
    Identity {
        name: "genus-sum",
        needs: Needs::Nothing,
        check: genus_sum,
    },
    Identity {
        name: "deletion-contraction",
        needs: Needs::Nothing,
        check: deletion_contraction,
    },
    Identity {
        name: "tutte",
        needs: Needs::Nothing,
        check: tutte_chain,
    },
    Identity {
        name: "duality",
        needs: Needs::Cellular,
        check: duality,
    },
    Identity {
        name: "br",
        needs: Needs::Cellular,
        check: br_chain,
    },
    Identity {
        name: "lv",
        needs: Needs::Cellular,
        check: lv_chain,
    },
    Identity {
        name: "krushkal-expansion",
        needs: Needs::Cellular,
        check: krushkal_expansion,
    },
    Identity {
        name: "quasi-tree-partition",
        needs: Needs::Nothing,
        check: quasi_tree_partition,
    },
    Identity {
        name: "activity-identities",
        needs: Needs::Nothing,
        check: activity_identities,
    },
];

pub fn find(name: &str) -> Option<&'static Identity> {
    SUITE.iter().find(|i| i.name == name)
}

pub fn run_suite(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Vec<(&'static str, Outcome)> {
    SUITE.iter().map(|i| (i.name, i.run(e, orders))).collect()
}

fn surface_invariants(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let g = e.cellulation();
    let dual = e.cellulation_dual();
    let all = g.all_edges();
    for f in all.subsets() {
        let sub = g.subgraph(f);
        let raw = 2 * sub.components() as i64 - g.vertex_count() as i64 + f.len() as i64
            - sub.boundary_components() as i64;
        ensure!(raw >= 0, "negative genus for {f:?}");
        ensure!(
            !sub.is_orientable() || raw % 2 == 0,
            "orientable subgraph {f:?} has odd genus {raw}"
        );
        let bc_star = dual.subgraph(all.difference(f)).boundary_components();
        ensure!(
            sub.boundary_components() == bc_star,
            "bc({f:?}) = {} but bc(F*) = {bc_star}",
            sub.boundary_components()
        );
    }
    Ok(())
}

fn partial_duality(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let g = e.cellulation();
    let all = g.all_edges();
    ensure!(
        g.partial_dual(EdgeSet::EMPTY).is_equivalent(g),
        "G^∅ differs from G"
    );
    ensure!(
        g.partial_dual(all).is_equivalent(e.cellulation_dual()),
        "G^E differs from the dual"
    );
    ensure!(
        g.dual().dual().is_equivalent(g),
        "the dual of the dual differs from G"
    );
    let duals: Vec<RibbonGraph> = all.subsets().map(|h| g.partial_dual(h)).collect();
    let base_c = g.full().components();
    let orientable = g.is_orientable();
    for h in all.subsets() {
        let d = &duals[h.0 as usize];
        ensure!(
            d.full().components() == base_c,
            "c(G^H) ≠ c(G) for H = {h:?}"
        );
        ensure!(
            d.vertex_count() == g.subgraph(h).boundary_components(),
            "v(G^H) ≠ bc(F_H) for H = {h:?}"
        );
        ensure!(
            d.full().boundary_components() == g.subgraph(all.difference(h)).boundary_components(),
            "bc(G^H) ≠ bc(F_(E-H)) for H = {h:?}"
        );
        ensure!(
            d.is_orientable() == orientable,
            "orientability changes for H = {h:?}"
        );
        let partners: Vec<EdgeSet> = if g.edge_count() <= PAIR_LIMIT {
            all.subsets().collect()
        } else {
            all.iter().map(EdgeSet::singleton).collect()
        };
        for h2 in partners {
            ensure!(
                d.partial_dual(h2)
                    .is_equivalent(&duals[h.symmetric_difference(h2).0 as usize]),
                "(G^H)^H' differs from G^(H△H') for H = {h:?}, H' = {h2:?}"
            );
        }
    }
    Ok(())
}

fn partial_dual_components(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let g = e.cellulation();
    let all = g.all_edges();
    for a in all.subsets() {
        let ga = g.partial_dual(a);
        for b in all.difference(a).subsets() {
            let keep = all.difference(b);
            ensure!(
                g.subgraph(keep).components() == ga.subgraph(keep).components(),
                "c(G - B) ≠ c(G^A - B) for A = {a:?}, B = {b:?}"
            );
        }
    }
    Ok(())
}

fn minor_counts(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let g = e.cellulation();
    let bc = g.full().boundary_components();
    for x in 0..g.edge_count() {
        let d = g.delete_edge(x);
        ensure!(
            d.edge_count() + 1 == g.edge_count() && d.vertex_count() == g.vertex_count(),
            "deleting {} has the wrong counts",
            g.edge_label(x)
        );
        if g.is_loop(x) {
            continue;
        }
        let c = g.contract_edge(x).map_err(|err| format!("{err}"))?;
        ensure!(
            c.edge_count() + 1 == g.edge_count() && c.vertex_count() + 1 == g.vertex_count(),
            "contracting {} has the wrong counts",
            g.edge_label(x)
        );
        ensure!(
            c.full().boundary_components() == bc,
            "contracting {} changes bc",
            g.edge_label(x)
        );
    }
    Ok(())
}

fn genus_sum(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let g = e.cellulation();
    let delta = e.surface_invariants().delta as i64;
    for f in e.marked().subsets() {
        let sub = g.subgraph(f);
        let ci = e.complement_invariants(f);
        let lhs = 2 * sub.nullity() as i64;
        let rhs = 2 * ci.kernel_dim as i64 + delta + sub.genus_s() as i64 - ci.s_perp as i64;
        ensure!(
            lhs == rhs,
            "2n(F) = {lhs} but the complement side gives {rhs} for F = {f:?}"
        );
    }
    Ok(())
}

fn deletion_contraction(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let k = krushkal(e);
    let u = e.cellulation().underlying();
    let marked = e.marked();
    let one = LaurentPoly::one;
    for x in marked.iter() {
        let label = e.cellulation().edge_label(x);
        if u.is_loop(x) {
            let kd = e.complement_invariants(EdgeSet::singleton(x)).kernel_dim;
            if kd == 1 {
                let rhs = &(one() + LaurentPoly::var(Var::Y)) * &krushkal(&e.unmark(x));
                ensure!(k == rhs, "separating loop {label}: {k} ≠ {rhs}");
            }
        } else if u.components(marked.without(x)) > u.components(marked) {
            let c = e.contract(x).map_err(|err| format!("{err}"))?;
            let rhs = &(one() + LaurentPoly::var(Var::X)) * &krushkal(&c);
            ensure!(k == rhs, "bridge {label}: {k} ≠ {rhs}");
        } else {
            let c = e.contract(x).map_err(|err| format!("{err}"))?;
            let rhs = krushkal(&e.unmark(x)) + krushkal(&c);
            ensure!(k == rhs, "edge {label}: {k} ≠ {rhs}");
        }
    }
    for extra in [fixtures::m1(), fixtures::t1()] {
        // labels starting with '#' cannot come out of a document
        let extra = EmbeddedGraph::cellular(extra.relabeled(|s| format!("#{s}")));
        let union = e.disjoint_union(&extra).map_err(|err| format!("{err}"))?;
        let rhs = &k * &krushkal(&extra);
        let lhs = krushkal(&union);
        ensure!(
            lhs == rhs,
            "disjoint union does not multiply: {lhs} ≠ {rhs}"
        );
    }
    Ok(())
}

fn tutte_chain(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    let t = tutte(&e.marked_ribbon().underlying());
    let s = specialize(&krushkal(e), PolyKind::Tutte, SpecializeContext::of(e))
        .map_err(|err| format!("{err}"))?;
    ensure!(s == t, "specialized Krushkal {s} ≠ Tutte {t}");
    for ord in orders {
        let x = expand(e, PolyKind::Tutte, ord).map_err(|err| format!("{err}"))?;
        ensure!(
            x == t,
            "expansion {x} ≠ Tutte {t} for order {:?}",
            ord.lowest_first()
        );
    }
    Ok(())
}

fn duality(e: &EmbeddedGraph, _: &[EdgeOrder]) -> Result<(), String> {
    let k = krushkal(e).swap(Var::X, Var::Y).swap(Var::A, Var::B);
    let kd = krushkal(&EmbeddedGraph::cellular(e.cellulation_dual().clone()));
    ensure!(k == kd, "P_G(Y,X,B,A) = {k} but P_G* = {kd}");
    Ok(())
}

fn br_chain(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    let br = bollobas_riordan(e.cellulation());
    let s = specialize(
        &krushkal(e),
        PolyKind::BollobasRiordan,
        SpecializeContext::of(e),
    )
    .map_err(|err| format!("{err}"))?;
    ensure!(s == br, "specialized Krushkal {s} ≠ BR {br}");
    for ord in orders {
        let x = expand(e, PolyKind::BollobasRiordan, ord).map_err(|err| format!("{err}"))?;
        ensure!(
            x == br,
            "expansion {x} ≠ BR {br} for order {:?}",
            ord.lowest_first()
        );
    }
    Ok(())
}

fn lv_chain(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    let lv = las_vergnas(e).map_err(|err| format!("{err}"))?;
    let s = specialize(&krushkal(e), PolyKind::LasVergnas, SpecializeContext::of(e))
        .map_err(|err| format!("{err}"))?;
    ensure!(s == lv, "specialized Krushkal {s} ≠ LV {lv}");
    for ord in orders {
        let x = expand(e, PolyKind::LasVergnas, ord).map_err(|err| format!("{err}"))?;
        ensure!(
            x == lv,
            "expansion {x} ≠ LV {lv} for order {:?}",
            ord.lowest_first()
        );
    }
    Ok(())
}

fn krushkal_expansion(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    let k = krushkal(e);
    for ord in orders {
        let x = expand(e, PolyKind::Krushkal, ord).map_err(|err| format!("{err}"))?;
        ensure!(
            x == k,
            "expansion {x} ≠ Krushkal {k} for order {:?}",
            ord.lowest_first()
        );
    }
    Ok(())
}

/// Runs `f` on every connected component of the cellulation with each order
/// restricted to it.
fn per_component<F>(e: &EmbeddedGraph, orders: &[EdgeOrder], mut f: F) -> Result<(), String>
where
    F: FnMut(&RibbonGraph, &EdgeOrder) -> Result<(), String>,
{
    for (g, kept) in e.cellulation().connected_components() {
        for ord in orders {
            f(&g, &ord.restrict(&kept))?;
        }
    }
    Ok(())
}

fn quasi_tree_partition(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    per_component(e, orders, |g, ord| {
        let err = |x: crate::Error| format!("{x}");
        let qts = quasi_trees(g).map_err(err)?;
        let part = QuasiTreePartition::new(g, ord).map_err(err)?;
        let mut hits = alloc::vec![0u32; 1 << g.edge_count()];
        for (q, a) in part.entries() {
            ensure!(
                a.vi().union(a.i_o) == *q,
                "quasi-tree {q:?} is not VI ∪ I_o"
            );
            for s in a.live_orientable().subsets() {
                hits[a.vi().union(s).0 as usize] += 1;
            }
        }
        if let Some(f) = hits.iter().position(|&n| n != 1) {
            return Err(format!(
                "subgraph {:?} lies in {} quasi-tree intervals",
                EdgeSet(f as u64),
                hits[f]
            ));
        }
        let tree = resolution_tree(g, ord).map_err(err)?;
        let mut leaves: Vec<EdgeSet> = tree
            .leaves()
            .map(|n| n.quasi_tree.expect("leaves carry a quasi-tree"))
            .collect();
        ensure!(
            leaves.len() == qts.len(),
            "{} leaves but {} quasi-trees",
            leaves.len(),
            qts.len()
        );
        for leaf in tree.leaves() {
            let q = leaf.quasi_tree.expect("leaves carry a quasi-tree");
            let a = activities(g, ord, q).map_err(err)?;
            ensure!(
                tree.unresolved(leaf) == a.live_orientable(),
                "leaf of {q:?} leaves {:?} unresolved, but I_o ∪ E_o = {:?}",
                tree.unresolved(leaf),
                a.live_orientable()
            );
        }
        leaves.sort();
        ensure!(
            leaves == qts,
            "leaf quasi-trees differ from the quasi-trees"
        );
        for f in g.all_edges().subsets() {
            let q = part.subgraph_to_quasitree(f).map_err(err)?;
            ensure!(
                tree.leaf_for(f).quasi_tree == Some(q),
                "tree and partition disagree on {f:?}"
            );
        }
        Ok(())
    })
}

fn activity_identities(e: &EmbeddedGraph, orders: &[EdgeOrder]) -> Result<(), String> {
    per_component(e, orders, |g, ord| {
        let err = |x: crate::Error| format!("{x}");
        let g_star = g.dual();
        let all = g.all_edges();
        for q in quasi_trees(g).map_err(err)? {
            let a = activities(g, ord, q).map_err(err)?;
            let a_star = activities(&g_star, ord, all.difference(q)).map_err(err)?;
            ensure!(
                a_star == a.swapped(),
                "activities of {q:?} and of its dual quasi-tree do not swap"
            );
            let m = build_minor_graphs(g, &g_star, &a);
            let (vi, ve) = (a.vi(), a.ve());
            let f_vi = g.subgraph(vi);
            let r_ve = g_star.subgraph(ve);
            ensure!(
                f_vi.boundary_components() == a.i_o.len() + 1,
                "bc(F_VI) = {} but |I_o| = {} for {q:?}",
                f_vi.boundary_components(),
                a.i_o.len()
            );
            for s1 in a.i_o.subsets() {
                let w = positions(&m.g_q_edges, s1);
                for s2 in a.e_o.subsets() {
                    let s = s1.union(s2);
                    let f = g.subgraph(vi.union(s));
                    ensure!(
                        f.components() == g.subgraph(vi.union(s1)).components(),
                        "c(F_(VI ∪ S)) ≠ c(F_(VI ∪ S1)) for {q:?}, S = {s:?}"
                    );
                    let bc = f_vi.boundary_components() as i64 - s1.len() as i64 + s2.len() as i64;
                    ensure!(
                        f.boundary_components() as i64 == bc,
                        "bc(F_(VI ∪ S)) = {} ≠ {bc} for {q:?}, S = {s:?}",
                        f.boundary_components()
                    );
                    ensure!(
                        f.genus_s() == f_vi.genus_s() + 2 * m.g_q.nullity(w),
                        "s(F_(VI ∪ S)) ≠ s(F_VI) + 2n(W) for {q:?}, S = {s:?}"
                    );
                    let s2c = a.e_o.difference(s2);
                    let sc = a.live_orientable().difference(s);
                    let r = g_star.subgraph(ve.union(sc));
                    ensure!(
                        r.components() == g_star.subgraph(ve.union(s2c)).components(),
                        "c(R_(VE ∪ S^c)) ≠ c(R_(VE ∪ S2^c)) for {q:?}, S = {s:?}"
                    );
                    let w_star = positions(&m.dual_q_edges, s2c);
                    ensure!(
                        r.genus_s() == r_ve.genus_s() + 2 * m.dual_q.nullity(w_star),
                        "s(R_(VE ∪ S^c)) ≠ s(R_VE) + 2n(W*) for {q:?}, S = {s:?}"
                    );
                }
            }
        }
        Ok(())
    })
}

/// The edges of a minor graph (listed by original index) that lie in `s`.
fn positions(edges: &[usize], s: EdgeSet) -> EdgeSet {
    edges
        .iter()
        .enumerate()
        .filter(|(_, &x)| s.contains(x))
        .map(|(i, _)| i)
        .collect()
}
