//! Seeded random ribbon graphs.
//!
//! The generator is SplitMix64 (state advanced by `0x9E3779B97F4A7C15`,
//! output mixed with multipliers `0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`
//! and shifts 30, 27, 31), seeded with the state equal to the seed. From its
//! 64-bit outputs `x`:
//!
//! * a uniform index below `n` is `x mod n`;
//! * a unit float is `(x >> 11) · 2^-53`.
//!
//! [`random_graph`] draws, in this order: the Prüfer sequence of a spanning
//! tree (`v - 2` indices below `v`); two endpoints (each an index below `v`)
//! for every further edge; then for each edge in turn the insertion position
//! of its first half-edge, of its second half-edge, and a unit float that
//! makes the edge twisted when it is below `twist_prob`.
//!
//! With the same inputs the output is identical everywhere.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use qp_core::{EdgeOrder, RibbonGraph, Sign, MAX_EDGES};
use rand_xoshiro::rand_core::{Rng as _, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomGraphError {
    #[error("need at least one vertex")]
    NoVertices,
    #[error("{edges} edges cannot connect {vertices} vertices")]
    TooFewEdges { vertices: usize, edges: usize },
    #[error("at most {MAX_EDGES} edges are supported")]
    TooManyEdges,
    #[error("twist probability must lie in [0, 1]")]
    BadProbability,
}

/// The documented stream of draws on top of SplitMix64.
#[derive(Debug, Clone)]
pub struct Draws(SplitMix64);

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish index below `n` (`x mod n`).
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        (self.next_u64() % n as u64) as usize
    }

    /// A float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher–Yates from the top: for `i = n-1 .. 1` swap `i` with an index
    /// below `i + 1`.
    pub fn order(&mut self, n: usize) -> EdgeOrder {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.index(i + 1);
            perm.swap(i, j);
        }
        EdgeOrder::new(perm).expect("a shuffle is a permutation")
    }
}

/// Decodes a Prüfer sequence over `0..n` into the `n - 1` tree edges.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| degree[x] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    if n >= 2 {
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        edges.push((a, b));
    }
    edges
}

/// A connected ribbon graph with `v` vertices (`v1`, `v2`, ...) and `e`
/// edges (`e1`, ... with half-edges `a1 b1`, ...). See the module docs for
/// the exact sequence of draws.
pub fn random_graph(
    v: usize,
    e: usize,
    twist_prob: f64,
    seed: u64,
) -> Result<RibbonGraph, RandomGraphError> {
    if v == 0 {
        return Err(RandomGraphError::NoVertices);
    }
    if e + 1 < v {
        return Err(RandomGraphError::TooFewEdges {
            vertices: v,
            edges: e,
        });
    }
    if e > MAX_EDGES {
        return Err(RandomGraphError::TooManyEdges);
    }
    if !(0.0..=1.0).contains(&twist_prob) {
        return Err(RandomGraphError::BadProbability);
    }
    let mut rng = Draws::new(seed);
    let seq: Vec<usize> = (0..v.saturating_sub(2)).map(|_| rng.index(v)).collect();
    let mut ends = prufer_edges(&seq, v);
    for _ in ends.len()..e {
        let a = rng.index(v);
        let b = rng.index(v);
        ends.push((a, b));
    }

    let mut rotations: Vec<Vec<String>> = vec![Vec::new(); v];
    let mut b = RibbonGraph::builder();
    let mut edges = Vec::with_capacity(e);
    for (k, &(x, y)) in ends.iter().enumerate() {
        let (hx, hy) = (format!("a{}", k + 1), format!("b{}", k + 1));
        let at = rng.index(rotations[x].len() + 1);
        rotations[x].insert(at, hx.clone());
        let at = rng.index(rotations[y].len() + 1);
        rotations[y].insert(at, hy.clone());
        let sign = if rng.unit() < twist_prob {
            Sign::Minus
        } else {
            Sign::Plus
        };
        edges.push((format!("e{}", k + 1), hx, hy, sign));
    }
    for (i, rot) in rotations.into_iter().enumerate() {
        b = b.vertex(format!("v{}", i + 1), rot);
    }
    for (label, x, y, sign) in edges {
        b = b.edge(label, x, y, sign);
    }
    Ok(b.build().expect("generated graphs are well formed"))
}
