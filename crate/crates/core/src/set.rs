//! Small finite sets of indices packed into a single machine word.

use std::fmt;

/// A subset of `0..64`, stored as a bitmask.
///
/// Vertex sets of complexes, atom sets of lattices and vertex sets of graphs
/// all use this type; the owning structure decides what an index means.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(u64);

/// Largest index that fits into an [`IndexSet`], plus one.
pub const MAX_INDEX: usize = 64;

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_INDEX, "index set capacity is {MAX_INDEX}");
        if n == MAX_INDEX {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_INDEX, "index {i} out of range");
        IndexSet(1u64 << i)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_INDEX && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.with(i);
    }

    pub fn remove(&mut self, i: usize) {
        *self = self.without(i);
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | Self::singleton(i).0)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !Self::singleton(i).0)
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Renumbers the members of `self` that lie in `within` by their rank
    /// inside `within`; members outside `within` are dropped.
    pub fn compress(self, within: IndexSet) -> IndexSet {
        within
            .iter()
            .enumerate()
            .filter(|&(_, i)| self.contains(i))
            .map(|(rank, _)| rank)
            .collect()
    }

    /// Inverse of [`Self::compress`]: rank `r` becomes the `r`-th member of
    /// `within`.
    pub fn expand(self, within: IndexSet) -> IndexSet {
        within
            .iter()
            .enumerate()
            .filter(|&(rank, _)| self.contains(rank))
            .map(|(_, i)| i)
            .collect()
    }

    /// All subsets of `self`, in increasing order of their bitmask.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, |s, i| s.with(i))
    }
}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Members of an [`IndexSet`] in ascending order.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subsets of a mask, enumerated with the usual `(s - mask) & mask` trick.
#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(IndexSet(cur))
    }
}
