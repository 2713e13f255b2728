//! Fixed-width element sets over a carrier of at most 64 elements.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier a [`Set`] can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of `{0, .., n-1}` stored as a bitmask; bit `i` is element `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Set(u64);

impl Set {
    pub const EMPTY: Set = Set(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Set(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full carrier `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            Set(u64::MAX)
        } else {
            Set((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(x: usize) -> Self {
        Set(1u64 << x)
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
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
    pub fn union(self, other: Set) -> Set {
        Set(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Set) -> Set {
        Set(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Set) -> Set {
        Set(self.0 & !other.0)
    }

    /// Complement relative to a carrier of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Set {
        Set(!self.0).intersection(Set::full(n))
    }

    #[inline]
    pub fn is_subset(self, other: Set) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Key used for every canonical listing: size first, then bitmask.
    #[inline]
    pub fn canonical_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }
}

impl FromIterator<usize> for Set {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Set::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Set {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`Set`].
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

impl fmt::Debug for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates every submask of `mask`, including `mask` itself and the empty set.
pub fn submasks(mask: Set) -> impl Iterator<Item = Set> {
    let m = mask.bits();
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & m) };
        Some(Set(c))
    })
}
