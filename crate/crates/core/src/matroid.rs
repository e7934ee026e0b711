//! Rank functions of cycle and bond matroids of ordinary graphs.

use crate::{EdgeSet, OrdinaryGraph};

/// A matroid on the ground set `{0, .., n-1}` given by its rank function.
pub trait RankFunction {
    fn ground(&self) -> EdgeSet;

    fn rank(&self, subset: EdgeSet) -> usize;

    /// `n(H) = |H| - r(H)`.
    fn nullity(&self, subset: EdgeSet) -> usize {
        subset.len() - self.rank(subset)
    }

    /// The dual matroid, `r*(H) = |H| + r(M \ H) - r(M)`.
    fn dual(self) -> DualMatroid<Self>
    where
        Self: Sized,
    {
        DualMatroid(self)
    }
}

/// Rank `r(F) = v(G) - c(F)`.
#[derive(Debug, Clone, Copy)]
pub struct CycleMatroid<'g>(pub &'g OrdinaryGraph);

impl RankFunction for CycleMatroid<'_> {
    fn ground(&self) -> EdgeSet {
        self.0.all_edges()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        cycle_rank(self.0, subset)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DualMatroid<R>(pub R);

impl<R: RankFunction> RankFunction for DualMatroid<R> {
    fn ground(&self) -> EdgeSet {
        self.0.ground()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        dual_rank(&self.0, subset)
    }
}

/// The bond matroid of `g`: the dual of its cycle matroid.
pub fn bond_matroid(g: &OrdinaryGraph) -> DualMatroid<CycleMatroid<'_>> {
    CycleMatroid(g).dual()
}

pub fn cycle_rank(g: &OrdinaryGraph, subset: EdgeSet) -> usize {
    g.vertex_count() - g.components(subset)
}

pub fn dual_rank<R: RankFunction + ?Sized>(r: &R, subset: EdgeSet) -> usize {
    let ground = r.ground();
    debug_assert!(subset.is_subset(ground));
    subset.len() + r.rank(ground.difference(subset)) - r.rank(ground)
}

pub fn nullity_of<R: RankFunction + ?Sized>(r: &R, subset: EdgeSet) -> usize {
    r.nullity(subset)
}

/// Which rank axiom failed, and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptyRank(usize),
    UnitIncrease { set: EdgeSet, added: usize },
    Closure { set: EdgeSet, y: usize, z: usize },
}

/// Checks the three rank axioms over every subset of the ground set.
pub fn check_axioms<R: RankFunction + ?Sized>(r: &R) -> Result<(), AxiomViolation> {
    let ground = r.ground();
    let r0 = r.rank(EdgeSet::EMPTY);
    if r0 != 0 {
        return Err(AxiomViolation::EmptyRank(r0));
    }
    for h in ground.subsets() {
        let rh = r.rank(h);
        let outside = ground.difference(h);
        for y in outside.iter() {
            let ry = r.rank(h.with(y));
            if ry != rh && ry != rh + 1 {
                return Err(AxiomViolation::UnitIncrease { set: h, added: y });
            }
            if ry != rh {
                continue;
            }
            for z in outside.iter().filter(|&z| z > y) {
                if r.rank(h.with(z)) == rh && r.rank(h.with(y).with(z)) != rh {
                    return Err(AxiomViolation::Closure { set: h, y, z });
                }
            }
        }
    }
    Ok(())
}
