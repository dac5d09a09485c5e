//! Fixed-universe bitsets tagged with the side of the context they index.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use smallvec::SmallVec;

type Words = SmallVec<[u64; 2]>;

/// Tag for sets of objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obj {}

/// Tag for sets of attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attr {}

/// A subset of `0..universe`, tagged with what the indices refer to.
pub struct IndexSet<K> {
    universe: usize,
    words: Words,
    kind: PhantomData<fn() -> K>,
}

/// Subset of a context's objects.
pub type ObjectSet = IndexSet<Obj>;
/// Subset of a context's attributes.
pub type AttributeSet = IndexSet<Attr>;

fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl<K> IndexSet<K> {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: smallvec::smallvec![0; word_count(universe)],
            kind: PhantomData,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from indices. Panics on an index outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Low bits of `mask` become members; `universe` must be at most 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets are limited to 64 elements");
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    /// The members as a 64-bit mask; `None` if any member is ≥ 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.words.iter().skip(1).any(|&w| w != 0) {
            return None;
        }
        Some(self.words.first().copied().unwrap_or(0))
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe of {}", self.universe);
        let was = self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        !was
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let was = self.contains(i);
        if was {
            self.words[i / 64] &= !(1 << (i % 64));
        }
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "sets over different universes cannot be combined"
        );
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The same members reinterpreted under another tag.
    pub fn cast<L>(&self) -> IndexSet<L> {
        IndexSet {
            universe: self.universe,
            words: self.words.clone(),
            kind: PhantomData,
        }
    }

    /// Same members with the universe grown (or shrunk) to `universe`.
    pub fn resized(&self, universe: usize) -> Self {
        Self::from_indices(universe, self.iter().filter(|&i| i < universe))
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a, K> IntoIterator for &'a IndexSet<K> {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl<K> Clone for IndexSet<K> {
    fn clone(&self) -> Self {
        Self {
            universe: self.universe,
            words: self.words.clone(),
            kind: PhantomData,
        }
    }
}

impl<K> PartialEq for IndexSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words == other.words
    }
}

impl<K> Eq for IndexSet<K> {}

impl<K> Hash for IndexSet<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.words.hash(state);
    }
}

/// Lexicographic order on the increasing member lists.
impl<K> Ord for IndexSet<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl<K> PartialOrd for IndexSet<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K> fmt::Debug for IndexSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_respects_universe() {
        let s = ObjectSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains(69));
        assert!(!s.contains(70));
        assert!(ObjectSet::full(0).is_empty());
    }

    #[test]
    fn iteration_crosses_word_boundary() {
        let s = ObjectSet::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(s.to_mask(), None);
    }

    #[test]
    fn order_is_lexicographic_on_members() {
        let a = ObjectSet::from_indices(4, [0, 1]);
        let b = ObjectSet::from_indices(4, [0, 2]);
        let c = ObjectSet::from_indices(4, [1]);
        let d = ObjectSet::from_indices(4, [0]);
        assert!(d < a && a < b && b < c);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_mask_arithmetic(a in any::<u64>(), b in any::<u64>(), n in 1usize..=64) {
            let x = ObjectSet::from_mask(n, a);
            let y = ObjectSet::from_mask(n, b);
            let m = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            prop_assert_eq!(x.intersection(&y).to_mask(), Some(a & b & m));
            prop_assert_eq!(x.union(&y).to_mask(), Some((a | b) & m));
            prop_assert_eq!(x.complement().to_mask(), Some(!a & m));
            prop_assert_eq!(x.is_subset(&y), (a & m) & !(b & m) == 0);
            prop_assert_eq!(x.len(), (a & m).count_ones() as usize);
        }
    }
}
