//! Finite partial orders.

use crate::bitset::{Set, MAX_CARRIER};
use crate::error::{Error, Result};

/// A validated partial order on `{0, .., n-1}`.
///
/// Rows are stored twice, as principal up-sets and principal down-sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<Set>,
    down: Vec<Set>,
}

/// Checks reflexivity, antisymmetry and transitivity, in that order, and
/// reports the lexicographically smallest witness of the first failure.
pub fn validate_poset(leq: &[Vec<bool>]) -> Result<Poset> {
    let n = leq.len();
    if let Some((row, r)) = leq.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::NotSquare { rows: n, row, len: r.len() });
    }
    if n > MAX_CARRIER {
        return Err(Error::CarrierTooLarge(n));
    }
    if let Some(x) = (0..n).find(|&x| !leq[x][x]) {
        return Err(Error::NotReflexive(x));
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && leq[x][y] && leq[y][x] {
                return Err(Error::NotAntisymmetric(x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !leq[x][y] {
                continue;
            }
            for z in 0..n {
                if leq[y][z] && !leq[x][z] {
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
    }
    Ok(Poset::from_matrix_unchecked(leq))
}

impl Poset {
    fn from_matrix_unchecked(leq: &[Vec<bool>]) -> Self {
        let n = leq.len();
        let mut up = vec![Set::EMPTY; n];
        let mut down = vec![Set::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        Poset { n, up, down }
    }

    /// Builds a poset from its up-set rows; used by the enumerators, which
    /// only produce valid orders. Validity is still checked in debug builds.
    pub(crate) fn from_up_rows(up: Vec<Set>) -> Self {
        let n = up.len();
        let mut down = vec![Set::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let p = Poset { n, up, down };
        debug_assert!(validate_poset(&p.matrix()).is_ok());
        p
    }

    /// Closes a relation given as pairs `(x, y)` meaning `x <= y` under
    /// reflexivity and transitivity, then validates the result.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut m = vec![vec![false; n]; n];
        for (x, row) in m.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::ElementOutOfRange(x.max(y)));
            }
            m[x][y] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if m[i][k] {
                    for j in 0..n {
                        if m[k][j] {
                            m[i][j] = true;
                        }
                    }
                }
            }
        }
        validate_poset(&m)
    }

    /// The `n`-element chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let up = (0..n).map(|x| Set::full(n).difference(Set::full(x))).collect();
        Poset::from_up_rows(up)
    }

    /// The discrete order on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Poset::from_up_rows((0..n).map(Set::singleton).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Principal up-set `{y | x <= y}`.
    #[inline]
    pub fn up(&self, x: usize) -> Set {
        self.up[x]
    }

    /// Principal down-set `{y | y <= x}`.
    #[inline]
    pub fn down(&self, x: usize) -> Set {
        self.down[x]
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.leq(x, y)).collect()).collect()
    }

    /// Greatest element, if one exists.
    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.down[x] == Set::full(self.n))
    }

    /// Least element, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.up[x] == Set::full(self.n))
    }

    /// Common upper bounds of all members of `s` (the whole carrier for `s = ∅`).
    pub fn upper_bounds(&self, s: Set) -> Set {
        s.iter().fold(Set::full(self.n), |acc, x| acc.intersection(self.up[x]))
    }

    pub fn lower_bounds(&self, s: Set) -> Set {
        s.iter().fold(Set::full(self.n), |acc, x| acc.intersection(self.down[x]))
    }

    /// Least element of `s`, if `s` has one.
    pub fn least_of(&self, s: Set) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.up[x]))
    }

    /// Greatest element of `s`, if `s` has one.
    pub fn greatest_of(&self, s: Set) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.down[x]))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| self.up[x].union(self.down[x]) == Set::full(self.n))
    }

    /// Upward closure of an arbitrary element set.
    pub fn upward_closure(&self, s: Set) -> Set {
        s.iter().fold(Set::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    pub fn is_upward_closed(&self, s: Set) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Minimal elements of `s`.
    pub fn minimal_of(&self, s: Set) -> Set {
        s.iter().filter(|&x| self.down[x].intersection(s) == Set::singleton(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect()
    }

    #[test]
    fn discrete_order_is_valid() {
        let p = validate_poset(&identity(3)).unwrap();
        assert_eq!(p, Poset::antichain(3));
        assert!(p.top().is_none());
    }

    #[test]
    fn full_relation_is_not_antisymmetric() {
        let full = vec![vec![true; 2]; 2];
        assert_eq!(validate_poset(&full), Err(Error::NotAntisymmetric(0, 1)));
    }

    #[test]
    fn missing_transitive_pair() {
        // 0 <= a <= 1 with (0, 1) omitted
        let mut m = identity(3);
        m[0][1] = true;
        m[1][2] = true;
        assert_eq!(validate_poset(&m), Err(Error::NotTransitive(0, 1, 2)));
    }

    #[test]
    fn not_reflexive_and_not_square() {
        let mut m = identity(2);
        m[1][1] = false;
        assert_eq!(validate_poset(&m), Err(Error::NotReflexive(1)));
        let ragged = vec![vec![true, false], vec![true]];
        assert!(matches!(validate_poset(&ragged), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn pairs_are_closed() {
        let p = Poset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.top(), Some(2));
        assert_eq!(p.bottom(), Some(0));
        assert!(p.is_chain());
    }

    #[test]
    fn bounds() {
        // diamond 0 < a, b < 1
        let p = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.upper_bounds(Set::from_bits(0b0110)), Set::singleton(3));
        assert_eq!(p.upper_bounds(Set::EMPTY), Set::full(4));
        assert_eq!(p.least_of(p.upper_bounds(Set::from_bits(0b0110))), Some(3));
        assert_eq!(p.minimal_of(Set::from_bits(0b1110)), Set::from_bits(0b0110));
        assert_eq!(p.upward_closure(Set::singleton(1)), Set::from_bits(0b1010));
    }
}
