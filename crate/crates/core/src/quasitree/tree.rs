use alloc::vec::Vec;

use super::{activities, quasi_trees, ActivityPartition, EdgeOrder};
use crate::{EdgeSet, Error, RibbonGraph};

/// Edges forced into (`ones`) and out of (`zeros`) the subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartialResolution {
    pub ones: EdgeSet,
    pub zeros: EdgeSet,
}

impl PartialResolution {
    pub fn resolved(&self) -> EdgeSet {
        self.ones.union(self.zeros)
    }

    /// Whether the spanning subgraph `f` agrees with every resolved edge.
    pub fn admits(&self, f: EdgeSet) -> bool {
        self.ones.is_subset(f) && self.zeros.is_disjoint(f)
    }

    fn set(self, e: usize, one: bool) -> Self {
        if one {
            Self {
                ones: self.ones.with(e),
                ..self
            }
        } else {
            Self {
                zeros: self.zeros.with(e),
                ..self
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub resolution: PartialResolution,
    /// Branch edge and the indices of the 0- and 1-children.
    pub branch: Option<(usize, [usize; 2])>,
    /// At a leaf, the only quasi-tree compatible with the resolution.
    pub quasi_tree: Option<EdgeSet>,
}

/// The binary tree of partial resolutions. Nodes are stored in preorder with
/// the 0-child explored first, so leaves appear in the same order a
/// depth-first walk meets them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionTree {
    nodes: Vec<TreeNode>,
    all: EdgeSet,
}

impl ResolutionTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &TreeNode {
        &self.nodes[i]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> + '_ {
        self.nodes.iter().filter(|n| n.branch.is_none())
    }

    /// Edges left unresolved at `node`.
    pub fn unresolved(&self, node: &TreeNode) -> EdgeSet {
        self.all.difference(node.resolution.resolved())
    }

    /// Walks from the root following `f` and returns the leaf reached.
    pub fn leaf_for(&self, f: EdgeSet) -> &TreeNode {
        let mut at = &self.nodes[0];
        while let Some((e, kids)) = at.branch {
            at = &self.nodes[kids[f.contains(e) as usize]];
        }
        at
    }
}

/// Builds the resolution tree. At each node the unresolved edges are scanned
/// from highest to lowest; the first one whose both resolutions still admit a
/// quasi-tree is branched on. When every unresolved edge is nugatory the node
/// is a leaf.
pub fn resolution_tree(g: &RibbonGraph, ord: &EdgeOrder) -> Result<ResolutionTree, Error> {
    ord.check(g)?;
    let qts = quasi_trees(g)?;
    let all = g.all_edges();
    let admits_some = |r: PartialResolution| qts.iter().any(|&q| r.admits(q));

    let mut nodes: Vec<TreeNode> = Vec::new();
    // (resolution, parent slot to patch)
    let mut stack: Vec<(PartialResolution, Option<(usize, usize)>)> =
        alloc::vec![(PartialResolution::default(), None)];
    while let Some((res, parent)) = stack.pop() {
        let id = nodes.len();
        if let Some((p, side)) = parent {
            let (_, kids) = nodes[p].branch.as_mut().expect("parent branches");
            kids[side] = id;
        }
        let unresolved = all.difference(res.resolved());
        let split = ord
            .descending(unresolved)
            .find(|&e| admits_some(res.set(e, false)) && admits_some(res.set(e, true)));
        match split {
            Some(e) => {
                nodes.push(TreeNode {
                    resolution: res,
                    branch: Some((e, [usize::MAX; 2])),
                    quasi_tree: None,
                });
                stack.push((res.set(e, true), Some((id, 1))));
                stack.push((res.set(e, false), Some((id, 0))));
            }
            None => {
                let mut fits = qts.iter().copied().filter(|&q| res.admits(q));
                let q = fits.next().expect("every node admits a quasi-tree");
                debug_assert!(fits.next().is_none(), "a leaf admits one quasi-tree");
                nodes.push(TreeNode {
                    resolution: res,
                    branch: None,
                    quasi_tree: Some(q),
                });
            }
        }
    }
    Ok(ResolutionTree { nodes, all })
}

/// Every quasi-tree with its activities; the intervals
/// `[VI(Q), VI(Q) ∪ I_o(Q) ∪ E_o(Q)]` partition the spanning subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiTreePartition {
    entries: Vec<(EdgeSet, ActivityPartition)>,
}

impl QuasiTreePartition {
    pub fn new(g: &RibbonGraph, ord: &EdgeOrder) -> Result<Self, Error> {
        let entries = quasi_trees(g)?
            .into_iter()
            .map(|q| Ok((q, activities(g, ord, q)?)))
            .collect::<Result<_, Error>>()?;
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(EdgeSet, ActivityPartition)] {
        &self.entries
    }

    /// The quasi-tree whose interval contains `f`.
    pub fn subgraph_to_quasitree(&self, f: EdgeSet) -> Result<EdgeSet, Error> {
        self.entries
            .iter()
            .find(|(_, a)| a.vi().is_subset(f) && f.is_subset(a.vi().union(a.live_orientable())))
            .map(|&(q, _)| q)
            .ok_or(Error::NoQuasiTreeMatch(f.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn t1_tree() {
        let t1 = fixtures::t1();
        let tree = resolution_tree(&t1, &EdgeOrder::identity(2)).unwrap();
        // the two quasi-trees differ in both edges; branching on eb first
        // leaves ea unresolved in each leaf
        assert_eq!(tree.root().branch.map(|b| b.0), Some(1));
        for leaf in tree.leaves() {
            assert_eq!(tree.unresolved(leaf), EdgeSet(0b01));
        }
        let leaves: Vec<_> = tree.leaves().map(|n| n.quasi_tree.unwrap()).collect();
        assert_eq!(leaves, [EdgeSet(0b00), EdgeSet(0b11)]);
        assert_eq!(tree.leaf_for(EdgeSet(0b01)).quasi_tree, Some(EdgeSet(0b00)));
    }

    #[test]
    fn leaves_are_the_quasi_trees() {
        for g in fixtures::all() {
            let ord = EdgeOrder::identity(g.edge_count());
            let tree = resolution_tree(&g, &ord).unwrap();
            let mut leaves: Vec<_> = tree.leaves().map(|n| n.quasi_tree.unwrap()).collect();
            leaves.sort();
            assert_eq!(leaves, quasi_trees(&g).unwrap());
        }
    }

    #[test]
    fn partition_covers_every_subgraph() {
        for g in fixtures::all() {
            let ord = EdgeOrder::identity(g.edge_count());
            let part = QuasiTreePartition::new(&g, &ord).unwrap();
            let tree = resolution_tree(&g, &ord).unwrap();
            for f in g.all_edges().subsets() {
                let q = part.subgraph_to_quasitree(f).unwrap();
                assert_eq!(tree.leaf_for(f).quasi_tree, Some(q));
            }
        }
    }
}
