//! Subsets of a finite carrier `0..n`, stored as bitsets.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `{0, .., ambient_n - 1}`.
///
/// Ordering is by size first, then lexicographically on the sorted members,
/// which is the order every enumeration in this crate reports in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    words: Vec<u64>,
    ambient_n: usize,
    len: usize,
}

impl ElementSubset {
    pub fn empty(ambient_n: usize) -> Self {
        ElementSubset {
            words: vec![0; ambient_n.div_ceil(WORD)],
            ambient_n,
            len: 0,
        }
    }

    pub fn full(ambient_n: usize) -> Self {
        let mut s = Self::empty(ambient_n);
        for x in 0..ambient_n {
            s.insert(x);
        }
        s
    }

    /// Builds a subset from members; panics if a member is out of range.
    pub fn from_members<I: IntoIterator<Item = usize>>(ambient_n: usize, members: I) -> Self {
        let mut s = Self::empty(ambient_n);
        for x in members {
            assert!(x < ambient_n, "element {x} outside carrier of size {ambient_n}");
            s.insert(x);
        }
        s
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.ambient_n
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.ambient_n && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    /// Inserts `x`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / WORD, x % WORD);
        let fresh = self.words[w] >> b & 1 == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, x: usize) -> bool {
        let (w, b) = (x / WORD, x % WORD);
        let present = self.words[w] >> b & 1 == 1;
        if present {
            self.words[w] &= !(1 << b);
            self.len -= 1;
        }
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + t)
            })
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &ElementSubset) -> bool {
        self.len < other.len && self.is_subset(other)
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElementSubset { words, ambient_n: self.ambient_n, len }
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElementSubset { words, ambient_n: self.ambient_n, len }
    }

    pub fn complement(&self) -> ElementSubset {
        let mut out = ElementSubset::empty(self.ambient_n);
        for x in 0..self.ambient_n {
            if !self.contains(x) {
                out.insert(x);
            }
        }
        out
    }
}

impl Ord for ElementSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.ambient_n.cmp(&other.ambient_n))
    }
}

impl PartialOrd for ElementSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_len() {
        let mut s = ElementSubset::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.len(), 2);
        assert_eq!(s.members(), vec![0, 129]);
        assert!(s.remove(0));
        assert!(!s.contains(0));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let a = ElementSubset::from_members(8, [0, 5]);
        let b = ElementSubset::from_members(8, [0, 2, 3]);
        let c = ElementSubset::from_members(8, [0, 6]);
        let mut v = vec![b.clone(), c.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, c, b]);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSubset::from_members(10, [0, 1, 2]);
        let b = ElementSubset::from_members(10, [2, 3]);
        assert_eq!(a.intersection(&b).members(), vec![2]);
        assert_eq!(a.union(&b).members(), vec![0, 1, 2, 3]);
        assert_eq!(b.complement().len(), 8);
        assert!(ElementSubset::from_members(10, [2]).is_proper_subset(&b));
        assert!(!b.is_subset(&a));
    }
}
