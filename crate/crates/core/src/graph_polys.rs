//! Definitional polynomial evaluators: each is a sum over all spanning
//! subgraphs, computed from the ribbon and matroid invariants directly.
//! Also the substitutions that specialize the Krushkal polynomial to the
//! other three.

use core::fmt;
use core::str::FromStr;

use crate::matroid::{bond_matroid, CycleMatroid, RankFunction};
use crate::poly::{HalfExp, LaurentPoly, Substitution, Var};
use crate::{EmbeddedGraph, Error, OrdinaryGraph, RibbonGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyKind {
    Krushkal,
    Tutte,
    BollobasRiordan,
    LasVergnas,
}

impl PolyKind {
    pub const ALL: [PolyKind; 4] = [
        PolyKind::Krushkal,
        PolyKind::Tutte,
        PolyKind::BollobasRiordan,
        PolyKind::LasVergnas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::Krushkal => "krushkal",
            PolyKind::Tutte => "tutte",
            PolyKind::BollobasRiordan => "br",
            PolyKind::LasVergnas => "lv",
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyKind {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| alloc::format!("unknown polynomial `{s}`"))
    }
}

/// The generalized Krushkal polynomial
/// `Σ_F X^(c(F)-c(G)) Y^(c(Σ\F)-c(Σ)) A^(s(F)/2) B^(s⊥(F)/2)`
/// over spanning subgraphs `F` of the marked graph.
pub fn krushkal(e: &EmbeddedGraph) -> LaurentPoly {
    let g = e.cellulation();
    let base_c = e.graph_components();
    let mut out = LaurentPoly::zero();
    for f in e.marked().subsets() {
        let sub = g.subgraph(f);
        let comp = e.complement_invariants(f);
        let x = 2 * (sub.components() - base_c) as i64;
        let y = 2 * comp.kernel_dim as i64;
        out += LaurentPoly::term(1, [x, y, sub.genus_s() as i64, comp.s_perp as i64, 0]);
    }
    out
}

/// `T_G(X, Y) = Σ_F X^(c(F)-c(G)) Y^(n(F))`, the Whitney-rank normalization
/// (classical Tutte polynomial shifted by one in each variable).
pub fn tutte(g: &OrdinaryGraph) -> LaurentPoly {
    let base_c = g.components(g.all_edges());
    let mut out = LaurentPoly::zero();
    for f in g.all_edges().subsets() {
        let c = g.components(f);
        let n = f.len() + c - g.vertex_count();
        out += LaurentPoly::term(1, [2 * (c - base_c) as i64, 2 * n as i64, 0, 0, 0]);
    }
    out
}

/// `BR_G(X, Y, Z) = Σ_F X^(c(F)-c(G)) Y^(n(F)) Z^(c(F)+n(F)-bc(F))`.
pub fn bollobas_riordan(g: &RibbonGraph) -> LaurentPoly {
    let base_c = g.full().components();
    let mut out = LaurentPoly::zero();
    for f in g.all_edges().subsets() {
        let sub = g.subgraph(f);
        let c = sub.components();
        let n = sub.nullity();
        let z = c + n - sub.boundary_components();
        out += LaurentPoly::term(
            1,
            [2 * (c - base_c) as i64, 2 * n as i64, 0, 0, 2 * z as i64],
        );
    }
    out
}

/// `LV = Σ_F (X-1)^(r(E)-r(F)) (Y-1)^(n̄(F)) Z^((r̄(E)-r̄(F)) - (r(E)-r(F)))`
/// with `r` the cycle matroid of `G` and `r̄` the bond matroid of `G*`.
pub fn las_vergnas(e: &EmbeddedGraph) -> Result<LaurentPoly, Error> {
    if !e.is_cellular() {
        return Err(Error::NotCellular);
    }
    let g = e.cellulation().underlying();
    let g_star = e.cellulation_dual().underlying();
    let r = CycleMatroid(&g);
    let r_bar = bond_matroid(&g_star);
    let all = g.all_edges();
    let (rank_all, bar_all) = (r.rank(all), r_bar.rank(all));
    let x1 = LaurentPoly::var(Var::X) - LaurentPoly::one();
    let y1 = LaurentPoly::var(Var::Y) - LaurentPoly::one();
    let mut out = LaurentPoly::zero();
    for f in all.subsets() {
        let dx = rank_all - r.rank(f);
        let dz = (bar_all - r_bar.rank(f)) as i64 - dx as i64;
        let term = &x1.pow(dx as u32) * &y1.pow(r_bar.nullity(f) as u32);
        out += term.shift(Var::Z, HalfExp::from_int(dz));
    }
    Ok(out)
}

/// Data about the source graph that the specializations need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecializeContext {
    /// `δ = 2c(Σ) - χ(Σ)`.
    pub delta: usize,
    /// `s(G)` of the whole ribbon graph.
    pub genus_s: usize,
}

impl SpecializeContext {
    pub fn of(e: &EmbeddedGraph) -> Self {
        Self {
            delta: e.surface_invariants().delta,
            genus_s: e.marked_ribbon().full().genus_s(),
        }
    }
}

/// Maps a Krushkal polynomial to the target polynomial:
///
/// * tutte: `Y^(δ/2) P(X, Y, Y, Y^-1)`
/// * br: `Y^(s(G)/2) P(X, Y, Y Z^2, Y^-1)`
/// * lv: `Z^(δ/2) P(X-1, Y-1, Z^-1, Z)`
pub fn specialize(
    p: &LaurentPoly,
    target: PolyKind,
    ctx: SpecializeContext,
) -> Result<LaurentPoly, Error> {
    let y = || LaurentPoly::var(Var::Y);
    let y_inv = || LaurentPoly::monomial(Var::Y, HalfExp::from_int(-1));
    let half = |n: usize| HalfExp::from_doubled(n as i64);
    match target {
        PolyKind::Krushkal => Ok(p.clone()),
        PolyKind::Tutte => {
            let s = Substitution::new().bind(Var::A, y()).bind(Var::B, y_inv());
            Ok(p.substitute(&s)?.shift(Var::Y, half(ctx.delta)))
        }
        PolyKind::BollobasRiordan => {
            let yz2 = LaurentPoly::term(1, [0, 2, 0, 0, 4]);
            let s = Substitution::new().bind(Var::A, yz2).bind(Var::B, y_inv());
            Ok(p.substitute(&s)?.shift(Var::Y, half(ctx.genus_s)))
        }
        PolyKind::LasVergnas => {
            let s = Substitution::new()
                .bind(Var::X, LaurentPoly::var(Var::X) - LaurentPoly::one())
                .bind(Var::Y, LaurentPoly::var(Var::Y) - LaurentPoly::one())
                .bind(Var::A, LaurentPoly::monomial(Var::Z, HalfExp::from_int(-1)))
                .bind(Var::B, LaurentPoly::var(Var::Z));
            Ok(p.substitute(&s)?.shift(Var::Z, half(ctx.delta)))
        }
    }
}

/// Evaluate `kind` on `e` by its own definition. Tutte uses the underlying
/// graph of the marked edges; Bollobás–Riordan the marked ribbon subgraph.
pub fn brute_force(e: &EmbeddedGraph, kind: PolyKind) -> Result<LaurentPoly, Error> {
    match kind {
        PolyKind::Krushkal => Ok(krushkal(e)),
        PolyKind::Tutte => Ok(tutte(&e.marked_ribbon().underlying())),
        PolyKind::BollobasRiordan => Ok(bollobas_riordan(&e.marked_ribbon())),
        PolyKind::LasVergnas => las_vergnas(e),
    }
}
