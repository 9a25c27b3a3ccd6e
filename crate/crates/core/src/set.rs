//! Subsets of a finite carrier, stored as bitsets.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::Elem;

/// A subset of `{0, …, universe-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElemSet::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn singleton(universe: usize, e: Elem) -> Self {
        let mut s = ElemSet::empty(universe);
        s.insert(e);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(universe: usize, elems: I) -> Self {
        let mut s = ElemSet::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// The subset whose members are the set bits of `mask` (universe ≤ 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        let mut s = ElemSet::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        e < self.universe && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    /// Inserts `e`, returning whether it was new.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        assert!(e < self.universe, "element {e} outside universe {}", self.universe);
        let w = &mut self.words[e / 64];
        let bit = 1u64 << (e % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, e: Elem) {
        if e < self.universe {
            self.words[e / 64] &= !(1u64 << (e % 64));
        }
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

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> ElemSet {
        let mut s = ElemSet::empty(self.universe);
        for e in 0..self.universe {
            if !self.contains(e) {
                s.insert(e);
            }
        }
        s
    }

    /// Image of the set under `map`, inside a universe of size `universe`.
    pub fn image(&self, map: &[Elem], universe: usize) -> ElemSet {
        ElemSet::from_elems(universe, self.iter().map(|e| map[e]))
    }

    /// Preimage of the set under `map`; `map` has one entry per source element.
    pub fn preimage(&self, map: &[Elem]) -> ElemSet {
        ElemSet::from_elems(
            map.len(),
            map.iter()
                .enumerate()
                .filter(|&(_, &t)| self.contains(t))
                .map(|(s, _)| s),
        )
    }

    /// Order used for reporting filter lists: smaller sets first, then
    /// lexicographic on the sorted member lists.
    pub fn cmp_card_lex(&self, other: &ElemSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = ElemSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert!(s.contains(129) && !s.contains(64));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![0, 129]);
    }

    #[test]
    fn card_lex_order() {
        let a = ElemSet::from_elems(4, [3]);
        let b = ElemSet::from_elems(4, [0, 1]);
        let c = ElemSet::from_elems(4, [0, 2]);
        assert_eq!(a.cmp_card_lex(&b), Ordering::Less);
        assert_eq!(b.cmp_card_lex(&c), Ordering::Less);
    }

    #[test]
    fn preimage_and_image() {
        let map = [1, 1, 0];
        let s = ElemSet::from_elems(2, [1]);
        assert_eq!(s.preimage(&map).to_vec(), vec![0, 1]);
        assert_eq!(ElemSet::full(3).image(&map, 2), ElemSet::full(2));
    }
}
