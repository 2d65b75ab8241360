//! Fixed-width bitsets over small index domains.
//!
//! Everything in this crate lives on carriers of at most [`BitSet::CAPACITY`]
//! elements (objects of a tensor system, points of a finite space), so a
//! single `u64` word is enough and gives a canonical total order for free.

use core::fmt;

/// A set of indices in `0..64`, stored as one machine word.
///
/// The derived `Ord` compares the underlying word, which is the canonical
/// "bitset order" used to sort ideals, frame elements and open sets.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitSet(u64);

impl BitSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        BitSet(0)
    }

    /// `{0, 1, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        BitSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < Self::CAPACITY);
        BitSet(1u64 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 & (1u64 << i) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let before = self.0;
        self.0 |= 1u64 << i;
        before != self.0
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        BitSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        BitSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Image of the set under an index map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).collect()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for BitSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`BitSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
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

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn basic_ops() {
        let a: BitSet = [0, 2, 5].into_iter().collect();
        let b: BitSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), [0, 2, 3, 5]);
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), [2]);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), [0, 5]);
        assert_eq!(a.complement(6).iter().collect::<Vec<_>>(), [1, 3, 4]);
        assert!(BitSet::singleton(2).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.len(), 3);
        assert_eq!(BitSet::full(64).len(), 64);
        assert_eq!(BitSet::full(0), BitSet::empty());
    }

    #[test]
    fn canonical_order_is_word_order() {
        let a: BitSet = [0, 1].into_iter().collect();
        let b: BitSet = [2].into_iter().collect();
        assert!(a < b);
    }
}
