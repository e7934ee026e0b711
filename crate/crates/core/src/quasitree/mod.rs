//! Quasi-trees and their activities.
//!
//! A quasi-tree is a spanning subgraph with a single boundary component.
//! Partial duality along a quasi-tree `Q` yields a one-vertex ribbon graph;
//! reading that vertex's rotation gives the word in which edges link or do
//! not link one another, and with a total order on the edges this splits
//! `E(G)` into six activity classes.

mod expansion;
mod tree;

use alloc::vec::Vec;
use core::fmt;

use crate::{EdgeSet, Error, RibbonGraph, Sign};

pub use expansion::{
    build_minor_graphs, expand, expansion_br, expansion_krushkal, expansion_lv, MinorGraphs,
};
pub use tree::{resolution_tree, PartialResolution, QuasiTreePartition, ResolutionTree, TreeNode};

/// A total order on the edges; `lowest_first[0]` is the lowest edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    lowest_first: Vec<usize>,
    rank: Vec<usize>,
}

impl EdgeOrder {
    /// Edge-declaration order.
    pub fn identity(n: usize) -> Self {
        Self {
            lowest_first: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn new(lowest_first: Vec<usize>) -> Result<Self, Error> {
        let n = lowest_first.len();
        let mut rank = alloc::vec![usize::MAX; n];
        for (i, &e) in lowest_first.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(Error::BadOrder(n));
            }
            rank[e] = i;
        }
        Ok(Self { lowest_first, rank })
    }

    pub fn len(&self) -> usize {
        self.lowest_first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lowest_first.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    /// `a ≺ b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn lowest_first(&self) -> &[usize] {
        &self.lowest_first
    }

    /// Edges of `set`, highest first.
    pub fn descending(&self, set: EdgeSet) -> impl Iterator<Item = usize> + '_ {
        self.lowest_first
            .iter()
            .rev()
            .copied()
            .filter(move |&e| set.contains(e))
    }

    /// The induced order on a subset of edges, renumbered: new edge `i` is
    /// old edge `kept[i]`.
    pub fn restrict(&self, kept: &[usize]) -> EdgeOrder {
        let mut idx: Vec<usize> = (0..kept.len()).collect();
        idx.sort_by_key(|&i| self.rank[kept[i]]);
        EdgeOrder::new(idx).expect("a sorted index list is a permutation")
    }

    /// Highest edge first becomes lowest.
    pub fn reversed(&self) -> EdgeOrder {
        EdgeOrder::new(self.lowest_first.iter().rev().copied().collect())
            .expect("reversal of a permutation")
    }

    fn check(&self, g: &RibbonGraph) -> Result<(), Error> {
        if self.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::BadOrder(g.edge_count()))
        }
    }
}

/// One occurrence of an edge end around the vertex of a one-vertex graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordLetter {
    pub edge: usize,
    /// 1 or 2: which half-edge of the edge, in declaration order.
    pub end: u8,
    pub sign: Sign,
}

/// The boundary word of the single vertex of `G^{E(Q)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWord {
    letters: Vec<WordLetter>,
}

impl VertexWord {
    /// Reads the rotation of a one-vertex ribbon graph.
    pub fn of_one_vertex(g: &RibbonGraph) -> Option<VertexWord> {
        if g.vertex_count() != 1 {
            return None;
        }
        let letters = g
            .rotation(0)
            .iter()
            .map(|&h| {
                let edge = g.half_edge_edge(h);
                WordLetter {
                    edge,
                    end: if g.halves(edge)[0] == h { 1 } else { 2 },
                    sign: g.sign(edge),
                }
            })
            .collect();
        Some(VertexWord { letters })
    }

    pub fn letters(&self) -> &[WordLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn positions(&self, e: usize) -> Option<(usize, usize)> {
        let mut it = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.edge == e)
            .map(|(i, _)| i);
        Some((it.next()?, it.next()?))
    }

    /// Whether the ends of `e` and `f` alternate around the vertex.
    pub fn links(&self, e: usize, f: usize) -> bool {
        links(self, e, f)
    }

    /// Whether `e` is a twisted loop in this word.
    pub fn is_twisted(&self, e: usize) -> bool {
        self.letters
            .iter()
            .find(|l| l.edge == e)
            .is_some_and(|l| l.sign.is_twisted())
    }

    /// Word from `(edge, sign)` pairs; ends are numbered by occurrence.
    pub fn from_edges(seq: &[(usize, Sign)]) -> VertexWord {
        let mut seen = alloc::collections::BTreeSet::new();
        let letters = seq
            .iter()
            .map(|&(edge, sign)| WordLetter {
                edge,
                end: if seen.insert(edge) { 1 } else { 2 },
                sign,
            })
            .collect();
        VertexWord { letters }
    }

    /// Displays with edge labels from `g`, e.g. `ea+ eb+ ea+ eb+`.
    pub fn display<'a>(&'a self, g: &'a RibbonGraph) -> impl fmt::Display + 'a {
        WordDisplay { word: self, g }
    }
}

struct WordDisplay<'a> {
    word: &'a VertexWord,
    g: &'a RibbonGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", self.g.edge_label(l.edge), l.sign)?;
        }
        Ok(())
    }
}

/// True iff the two occurrences of `e` and of `f` interleave cyclically.
pub fn links(w: &VertexWord, e: usize, f: usize) -> bool {
    if e == f {
        return false;
    }
    match (w.positions(e), w.positions(f)) {
        (Some((e1, e2)), Some((f1, f2))) => {
            let inside = |x: usize| e1 < x && x < e2;
            inside(f1) != inside(f2)
        }
        _ => false,
    }
}

/// All quasi-trees of a connected ribbon graph, in increasing bitmask order.
pub fn quasi_trees(g: &RibbonGraph) -> Result<Vec<EdgeSet>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.all_edges()
        .subsets()
        .filter(|&f| g.subgraph(f).boundary_components() == 1)
        .collect())
}

/// The word of `partial_dual(g, q)`.
pub fn one_vertex_word(g: &RibbonGraph, q: EdgeSet) -> Result<VertexWord, Error> {
    let bc = g.subgraph(q).boundary_components();
    if bc != 1 {
        return Err(Error::NotQuasiTree(bc));
    }
    Ok(VertexWord::of_one_vertex(&g.partial_dual(q)).expect("a quasi-tree dualizes to one vertex"))
}

/// The six-fold activity split of `E(G)` for a quasi-tree and an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActivityPartition {
    /// Internally dead.
    pub di: EdgeSet,
    /// Internally live orientable.
    pub i_o: EdgeSet,
    /// Internally live non-orientable.
    pub i_n: EdgeSet,
    /// Externally dead.
    pub de: EdgeSet,
    /// Externally live orientable.
    pub e_o: EdgeSet,
    /// Externally live non-orientable.
    pub e_n: EdgeSet,
}

impl ActivityPartition {
    /// `VI = DI ∪ I_n`.
    pub fn vi(&self) -> EdgeSet {
        self.di.union(self.i_n)
    }

    /// `VE = DE ∪ E_n`.
    pub fn ve(&self) -> EdgeSet {
        self.de.union(self.e_n)
    }

    pub fn internal(&self) -> EdgeSet {
        self.di.union(self.i_o).union(self.i_n)
    }

    /// `I_o ∪ E_o`: the edges free to vary within the quasi-tree's block.
    pub fn live_orientable(&self) -> EdgeSet {
        self.i_o.union(self.e_o)
    }

    pub fn classes(&self) -> [EdgeSet; 6] {
        [self.di, self.i_o, self.i_n, self.de, self.e_o, self.e_n]
    }

    /// The same partition seen from the dual quasi-tree: internal and
    /// external classes swap.
    pub fn swapped(&self) -> ActivityPartition {
        ActivityPartition {
            di: self.de,
            i_o: self.e_o,
            i_n: self.e_n,
            de: self.di,
            e_o: self.i_o,
            e_n: self.i_n,
        }
    }
}

pub fn activities(
    g: &RibbonGraph,
    ord: &EdgeOrder,
    q: EdgeSet,
) -> Result<ActivityPartition, Error> {
    ord.check(g)?;
    let word = one_vertex_word(g, q)?;
    Ok(activities_from_word(g.edge_count(), ord, q, &word))
}

pub(crate) fn activities_from_word(
    n: usize,
    ord: &EdgeOrder,
    q: EdgeSet,
    word: &VertexWord,
) -> ActivityPartition {
    let mut part = ActivityPartition::default();
    for e in 0..n {
        let live = !(0..n).any(|f| ord.precedes(f, e) && word.links(e, f));
        let orientable = !word.is_twisted(e);
        let class = match (q.contains(e), live, orientable) {
            (true, false, _) => &mut part.di,
            (true, true, true) => &mut part.i_o,
            (true, true, false) => &mut part.i_n,
            (false, false, _) => &mut part.de,
            (false, true, true) => &mut part.e_o,
            (false, true, false) => &mut part.e_n,
        };
        *class = class.with(e);
    }
    part
}
