use core::fmt;

/// A set of edge indices, stored as a bitmask in edge-declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> EdgeSet {
        debug_assert!(n <= 64);
        if n == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> EdgeSet {
        EdgeSet(1u64 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> EdgeSet {
        it.into_iter().fold(EdgeSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of `self`, starting from the empty set, in increasing
    /// bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        let cur = self.next?;
        // Standard submask successor: (cur - universe) & universe.
        let succ = cur.wrapping_sub(self.universe) & self.universe;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(EdgeSet(cur))
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        EdgeSet::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn subsets_enumerate_every_submask_once() {
        let u = EdgeSet(0b1011_0100);
        let all: Vec<EdgeSet> = u.subsets().collect();
        assert_eq!(all.len(), 1 << u.len());
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(all.iter().all(|s| s.is_subset(u)));
        assert_eq!(EdgeSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_sets() {
        assert_eq!(EdgeSet::full(0), EdgeSet::EMPTY);
        assert_eq!(EdgeSet::full(3).0, 0b111);
        assert_eq!(EdgeSet::full(64).len(), 64);
        assert_eq!(EdgeSet::full(5).iter().collect::<Vec<_>>(), [0, 1, 2, 3, 4]);
    }
}
