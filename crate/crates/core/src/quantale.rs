//! The quantale `U(A)` of upper sets of a quantum B-algebra.
//!
//! `U(A)` is ordered by inclusion, so joins are unions and meets are
//! intersections; the bottom is `∅` and the top is `A`. Multiplication and
//! both residuals are computed directly from the `→`/`⇝` tables of `A`, and
//! the product-table forms available for residuated posets are provided as
//! independent second routes.
//!
//! Arbitrary joins and meets in the law checks reduce to the binary and
//! nullary cases, which is exact for a finite lattice.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::bitset::Set;
use crate::error::{Error, Result};
use crate::report::ClassReport;

/// Default bound on the number of upper sets any enumeration may produce.
pub const DEFAULT_CAP: usize = 1 << 16;

/// Largest carrier for which inverse residuals are computed by scanning.
pub const INV_RES_MAX_CARRIER: usize = 16;

/// An upward-closed subset of the carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpperSet(Set);

impl UpperSet {
    pub const EMPTY: UpperSet = UpperSet(Set::EMPTY);

    /// Accepts `s` only if it is upward closed in `alg`.
    pub fn new(alg: &FiniteAlgebra, s: Set) -> Result<Self> {
        if alg.poset().is_upward_closed(s) {
            Ok(UpperSet(s))
        } else {
            Err(Error::NotUpperSet(s.bits()))
        }
    }

    pub(crate) fn new_unchecked(s: Set) -> Self {
        UpperSet(s)
    }

    /// The whole carrier, the top of `U(A)`.
    pub fn full(alg: &FiniteAlgebra) -> Self {
        UpperSet(alg.full())
    }

    #[inline]
    pub fn set(self) -> Set {
        self.0
    }

    #[inline]
    pub fn contains(self, x: Elem) -> bool {
        self.0.contains(x)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_subset(self, other: UpperSet) -> bool {
        self.0.is_subset(other.0)
    }

    /// Join in `U(A)`.
    #[inline]
    pub fn union(self, other: UpperSet) -> UpperSet {
        UpperSet(self.0.union(other.0))
    }

    /// Meet in `U(A)`.
    #[inline]
    pub fn intersection(self, other: UpperSet) -> UpperSet {
        UpperSet(self.0.intersection(other.0))
    }

    pub fn iter(self) -> crate::bitset::Iter {
        self.0.iter()
    }
}

impl From<UpperSet> for Set {
    fn from(u: UpperSet) -> Set {
        u.0
    }
}

/// Smallest upper set containing `s`.
pub fn upper_closure(alg: &FiniteAlgebra, s: Set) -> UpperSet {
    UpperSet(alg.poset().upward_closure(s))
}

/// Principal upper set `↑x`.
pub fn up(alg: &FiniteAlgebra, x: Elem) -> UpperSet {
    UpperSet(alg.poset().up(x))
}

/// Which factor the unknown occupies in an inverse residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorSide {
    /// `a ⇾ b = ⋀{X | X·a ⊇ b}`
    Left,
    /// `a ↣ b = ⋀{X | a·X ⊇ b}`
    Right,
}

/// Operations of `U(A)` for one algebra, with a cap on any enumeration of
/// the (possibly exponential) carrier of `U(A)`.
#[derive(Clone, Copy)]
pub struct Quantale<'a> {
    alg: &'a FiniteAlgebra,
    cap: usize,
}

impl<'a> Quantale<'a> {
    pub fn new(alg: &'a FiniteAlgebra, cap: usize) -> Self {
        Quantale { alg, cap }
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `X·Y = {a | ∃y∈Y, (y→a) ∈ X}`
    pub fn umul(&self, x: UpperSet, y: UpperSet) -> UpperSet {
        let a = self.alg;
        let out = a
            .elements()
            .filter(|&e| y.iter().any(|yy| x.contains(a.to(yy, e))))
            .collect();
        UpperSet(out)
    }

    /// `X·Y = {a | ∃x∈X ∃y∈Y, x·y ≤ a}`, the product-table form.
    pub fn umul_product(&self, x: UpperSet, y: UpperSet) -> Result<UpperSet> {
        let a = self.alg;
        a.require_mul()?;
        let mut prods = Set::EMPTY;
        for xx in x.iter() {
            for yy in y.iter() {
                prods.insert(a.mul(xx, yy));
            }
        }
        Ok(upper_closure(a, prods))
    }

    /// `X⇝Z = {y | ∀x∈X ∀z, x⇝z ≥ y ⇒ z∈Z}`
    pub fn ures_l(&self, x: UpperSet, z: UpperSet) -> UpperSet {
        let a = self.alg;
        let outside = z.set().complement(a.len());
        let mut bad = Set::EMPTY;
        for xx in x.iter() {
            for zz in outside.iter() {
                bad = bad.union(a.poset().down(a.lto(xx, zz)));
            }
        }
        UpperSet(bad.complement(a.len()))
    }

    /// `Y→Z = {x | ∀y∈Y ∀z, y→z ≥ x ⇒ z∈Z}`
    pub fn ures_r(&self, y: UpperSet, z: UpperSet) -> UpperSet {
        let a = self.alg;
        let outside = z.set().complement(a.len());
        let mut bad = Set::EMPTY;
        for yy in y.iter() {
            for zz in outside.iter() {
                bad = bad.union(a.poset().down(a.to(yy, zz)));
            }
        }
        UpperSet(bad.complement(a.len()))
    }

    /// `X⇝Z = {y | ∀x∈X ∀z, x·y ≤ z ⇒ z∈Z}`, the product-table form.
    pub fn ures_l_product(&self, x: UpperSet, z: UpperSet) -> Result<UpperSet> {
        let a = self.alg;
        a.require_mul()?;
        let out = a
            .elements()
            .filter(|&y| x.iter().all(|xx| z.contains(a.mul(xx, y))))
            .collect();
        Ok(UpperSet(out))
    }

    /// `Y→Z = {x | ∀y∈Y ∀z, x·y ≤ z ⇒ z∈Z}`, the product-table form.
    pub fn ures_r_product(&self, y: UpperSet, z: UpperSet) -> Result<UpperSet> {
        let a = self.alg;
        a.require_mul()?;
        let out = a
            .elements()
            .filter(|&x| y.iter().all(|yy| z.contains(a.mul(x, yy))))
            .collect();
        Ok(UpperSet(out))
    }

    /// Inverse residual: the meet of all upper sets `X` with `X·a ⊇ b`
    /// (`Left`) or `a·X ⊇ b` (`Right`). An empty family has meet `A`.
    ///
    /// Scans all of `U(A)`, so carriers above 16 elements are refused.
    pub fn inv_res(&self, a: UpperSet, b: UpperSet, side: FactorSide) -> Result<UpperSet> {
        if self.alg.len() > INV_RES_MAX_CARRIER {
            return Err(Error::CapExceeded { cap: INV_RES_MAX_CARRIER });
        }
        let all = enumerate_upper_sets(self.alg, 1 << INV_RES_MAX_CARRIER)?;
        let meet = all
            .into_iter()
            .filter(|&x| {
                let p = match side {
                    FactorSide::Left => self.umul(x, a),
                    FactorSide::Right => self.umul(a, x),
                };
                b.is_subset(p)
            })
            .fold(UpperSet::full(self.alg), UpperSet::intersection);
        Ok(meet)
    }

    /// All of `U(A)`, ascending by size then bitmask.
    pub fn enumerate(&self) -> Result<Vec<UpperSet>> {
        enumerate_upper_sets(self.alg, self.cap)
    }

    /// Quantale laws of `U(A)` over its full enumeration: associativity,
    /// distributivity over binary and empty joins, the five residual
    /// identities, the adjunction, and (integral case) `↑1` as two-sided unit.
    pub fn check_laws(&self) -> Result<ClassReport> {
        let sets = self.enumerate()?;
        let t = Tables::new(self, &sets);
        let m = sets.len();
        let mut rep = ClassReport::new("quantale_laws");
        let empty = t.idx(UpperSet::EMPTY);
        let top = t.idx(UpperSet::full(self.alg));

        for i in 0..m {
            if t.mul[i][empty] != empty || t.mul[empty][i] != empty {
                rep.record("q.zero", [sets[i].set()]);
            }
            if t.rr[empty][i] != top {
                rep.record("q.join_to.empty", [sets[i].set()]);
            }
            if t.rl[empty][i] != top {
                rep.record("q.join_lto.empty", [sets[i].set()]);
            }
            if let Some(u) = self.alg.unit().filter(|_| self.alg.is_integral()) {
                let unit = t.idx(up(self.alg, u));
                if t.mul[unit][i] != i || t.mul[i][unit] != i {
                    rep.record("q.unit", [sets[i].set()]);
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let w = [sets[i].set(), sets[j].set(), sets[k].set()];
                    let (x, y, z) = (i, j, k);
                    rep.check(t.mul[t.mul[x][y]][z] == t.mul[x][t.mul[y][z]], "q.assoc", w);
                    let yz = t.union(y, z);
                    rep.check(
                        t.mul[x][yz] == t.union(t.mul[x][y], t.mul[x][z]),
                        "q.join_left",
                        w,
                    );
                    rep.check(
                        t.mul[yz][x] == t.union(t.mul[y][x], t.mul[z][x]),
                        "q.join_right",
                        w,
                    );
                    // X⇝(Y→Z) = Y→(X⇝Z)
                    rep.check(t.rl[x][t.rr[y][z]] == t.rr[y][t.rl[x][z]], "q.res_swap", w);
                    // X→(Y→Z) = (X·Y)→Z
                    rep.check(t.rr[x][t.rr[y][z]] == t.rr[t.mul[x][y]][z], "q.curry_to", w);
                    // Y⇝(X⇝Z) = (X·Y)⇝Z
                    rep.check(t.rl[y][t.rl[x][z]] == t.rl[t.mul[x][y]][z], "q.curry_lto", w);
                    // (X∪Y)→Z = (X→Z)∩(Y→Z)
                    let xy = t.union(x, y);
                    rep.check(
                        t.rr[xy][z] == t.inter(t.rr[x][z], t.rr[y][z]),
                        "q.join_to",
                        w,
                    );
                    rep.check(
                        t.rl[xy][z] == t.inter(t.rl[x][z], t.rl[y][z]),
                        "q.join_lto",
                        w,
                    );
                    // X·Y ⊆ Z ⇔ X ⊆ Y→Z ⇔ Y ⊆ X⇝Z
                    let a = sets[t.mul[x][y]].is_subset(sets[z]);
                    let b = sets[x].is_subset(sets[t.rr[y][z]]);
                    let c = sets[y].is_subset(sets[t.rl[x][z]]);
                    rep.check(a == b && b == c, "q.adjunction", w);
                }
            }
        }
        Ok(rep)
    }

    /// The same laws on `samples` random triples, for algebras whose `U(A)`
    /// is too large to enumerate. Upper sets are closures of uniform subsets.
    pub fn sample_laws(&self, samples: usize, seed: u64) -> ClassReport {
        let a = self.alg;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = a.full().bits();
        let mut draw = || upper_closure(a, Set::from_bits(rng.gen::<u64>() & full));
        let mut rep = ClassReport::new("quantale_laws_sampled");
        for _ in 0..samples {
            let (x, y, z) = (draw(), draw(), draw());
            let w = [x.set(), y.set(), z.set()];
            let m = |p, q| self.umul(p, q);
            rep.check(m(m(x, y), z) == m(x, m(y, z)), "q.assoc", w);
            rep.check(m(x, y.union(z)) == m(x, y).union(m(x, z)), "q.join_left", w);
            rep.check(m(y.union(z), x) == m(y, x).union(m(z, x)), "q.join_right", w);
            rep.check(
                self.ures_l(x, self.ures_r(y, z)) == self.ures_r(y, self.ures_l(x, z)),
                "q.res_swap",
                w,
            );
            rep.check(
                self.ures_r(x, self.ures_r(y, z)) == self.ures_r(m(x, y), z),
                "q.curry_to",
                w,
            );
            rep.check(
                self.ures_l(y, self.ures_l(x, z)) == self.ures_l(m(x, y), z),
                "q.curry_lto",
                w,
            );
            rep.check(
                self.ures_r(x.union(y), z) == self.ures_r(x, z).intersection(self.ures_r(y, z)),
                "q.join_to",
                w,
            );
            rep.check(
                self.ures_l(x.union(y), z) == self.ures_l(x, z).intersection(self.ures_l(y, z)),
                "q.join_lto",
                w,
            );
            let p = m(x, y).is_subset(z);
            let q = x.is_subset(self.ures_r(y, z));
            let r = y.is_subset(self.ures_l(x, z));
            rep.check(p == q && q == r, "q.adjunction", w);
        }
        rep
    }

    /// `c` is supercompact: `c ⊆ X∪Y` forces `c ⊆ X` or `c ⊆ Y`. The empty
    /// set is never supercompact, since `∅ ≤ ⋁∅` has no witness.
    pub fn is_supercompact(&self, c: UpperSet) -> Result<bool> {
        if c.is_empty() {
            return Ok(false);
        }
        let sets = self.enumerate()?;
        for &x in &sets {
            for &y in &sets {
                if c.is_subset(x.union(y)) && !c.is_subset(x) && !c.is_subset(y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `c ≠ ∅` is balanced: multiplication by `c` on either side preserves
    /// binary meets and the empty meet (`c·A = A = A·c`).
    pub fn is_balanced(&self, c: UpperSet) -> Result<bool> {
        if c.is_empty() {
            return Ok(false);
        }
        let top = UpperSet::full(self.alg);
        if self.umul(c, top) != top || self.umul(top, c) != top {
            return Ok(false);
        }
        let sets = self.enumerate()?;
        let left: Vec<UpperSet> = sets.iter().map(|&x| self.umul(c, x)).collect();
        let right: Vec<UpperSet> = sets.iter().map(|&x| self.umul(x, c)).collect();
        for (i, &x) in sets.iter().enumerate() {
            for (j, &y) in sets.iter().enumerate() {
                let xy = x.intersection(y);
                if self.umul(c, xy) != left[i].intersection(left[j])
                    || self.umul(xy, c) != right[i].intersection(right[j])
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Over all of `U(A)`: `q.supercompact_principal` (supercompact iff of
    /// the form `↑x`) and `q.balanced_supercompact`.
    pub fn supercompact_characterization(&self) -> Result<ClassReport> {
        let mut rep = ClassReport::new("supercompact");
        for c in self.enumerate()? {
            let principal = self.alg.poset().least_of(c.set()).is_some();
            let sc = self.is_supercompact(c)?;
            rep.check(sc == principal, "q.supercompact_principal", [c.set()]);
            if self.is_balanced(c)? {
                rep.check(sc, "q.balanced_supercompact", [c.set()]);
            }
        }
        Ok(rep)
    }

    /// Coclosure (monotone, deflationary, idempotent) plus
    /// `g(X)·g(Y) ⊆ g(X·Y)`, over the given sets.
    pub fn check_conucleus(
        &self,
        sets: &[UpperSet],
        g: impl Fn(UpperSet) -> UpperSet,
    ) -> ClassReport {
        let mut rep = ClassReport::new("conucleus");
        let images: Vec<UpperSet> = sets.iter().map(|&x| g(x)).collect();
        for (i, &x) in sets.iter().enumerate() {
            let gx = images[i];
            rep.check(self.alg.poset().is_upward_closed(gx.set()), "conucleus.upper", [x.set()]);
            rep.check(gx.is_subset(x), "conucleus.deflationary", [x.set()]);
            rep.check(g(gx) == gx, "conucleus.idempotent", [x.set()]);
        }
        for (i, &x) in sets.iter().enumerate() {
            for (j, &y) in sets.iter().enumerate() {
                let w = [x.set(), y.set()];
                if x.is_subset(y) {
                    rep.check(images[i].is_subset(images[j]), "conucleus.monotone", w);
                }
                rep.check(
                    self.umul(images[i], images[j]).is_subset(g(self.umul(x, y))),
                    "conucleus.multiplicative",
                    w,
                );
            }
        }
        rep
    }

    /// `{X | g(X) = X}`, in the order of `sets`.
    pub fn fixed_points(
        &self,
        sets: &[UpperSet],
        g: impl Fn(UpperSet) -> UpperSet,
    ) -> Vec<UpperSet> {
        sets.iter().copied().filter(|&x| g(x) == x).collect()
    }

    /// Closure of `sub` under binary and empty unions and under `·`.
    pub fn check_subquantale(&self, sub: &[UpperSet]) -> ClassReport {
        let mut rep = ClassReport::new("subquantale");
        let has = |s: UpperSet| sub.contains(&s);
        rep.check::<Set>(has(UpperSet::EMPTY), "subquantale.empty_join", []);
        for &x in sub {
            for &y in sub {
                let w = [x.set(), y.set()];
                rep.check(has(x.union(y)), "subquantale.join", w);
                rep.check(has(self.umul(x, y)), "subquantale.mul", w);
            }
        }
        rep
    }
}

/// Operation tables of `U(A)` indexed by position in the enumeration.
struct Tables {
    index: HashMap<Set, usize>,
    mul: Vec<Vec<usize>>,
    rl: Vec<Vec<usize>>,
    rr: Vec<Vec<usize>>,
    sets: Vec<UpperSet>,
}

impl Tables {
    fn new(q: &Quantale<'_>, sets: &[UpperSet]) -> Self {
        let index: HashMap<Set, usize> =
            sets.iter().enumerate().map(|(i, s)| (s.set(), i)).collect();
        let build = |f: &dyn Fn(UpperSet, UpperSet) -> UpperSet| -> Vec<Vec<usize>> {
            sets.iter()
                .map(|&x| sets.iter().map(|&y| index[&f(x, y).set()]).collect())
                .collect()
        };
        Tables {
            mul: build(&|x, y| q.umul(x, y)),
            rl: build(&|x, z| q.ures_l(x, z)),
            rr: build(&|y, z| q.ures_r(y, z)),
            sets: sets.to_vec(),
            index,
        }
    }

    fn idx(&self, s: UpperSet) -> usize {
        self.index[&s.set()]
    }

    fn union(&self, i: usize, j: usize) -> usize {
        self.idx(self.sets[i].union(self.sets[j]))
    }

    fn inter(&self, i: usize, j: usize) -> usize {
        self.idx(self.sets[i].intersection(self.sets[j]))
    }
}

/// Every upper set of `alg` exactly once, ascending by size then bitmask.
///
/// Fails with `CapExceeded` as soon as more than `cap` sets are found.
pub fn enumerate_upper_sets(alg: &FiniteAlgebra, cap: usize) -> Result<Vec<UpperSet>> {
    let p = alg.poset();
    // Larger down-sets first: every element is visited after all elements above it.
    let mut order: Vec<Elem> = alg.elements().collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(p.down(x).len()), x));

    let mut out = Vec::new();
    let mut stack = vec![(0usize, Set::EMPTY)];
    while let Some((depth, cur)) = stack.pop() {
        if depth == order.len() {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(UpperSet(cur));
            continue;
        }
        let x = order[depth];
        stack.push((depth + 1, cur));
        let mut above = p.up(x);
        above.remove(x);
        if above.is_subset(cur) {
            let mut with = cur;
            with.insert(x);
            stack.push((depth + 1, with));
        }
    }
    out.sort_by_key(|u| u.set().canonical_key());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s(bits: u64) -> UpperSet {
        UpperSet(Set::from_bits(bits))
    }

    #[test]
    fn closures_in_g3_and_d5() {
        let g3 = catalog("godel:3").unwrap();
        assert_eq!(upper_closure(&g3, Set::singleton(0)), s(0b111));
        assert_eq!(upper_closure(&g3, Set::EMPTY), UpperSet::EMPTY);
        assert_eq!(up(&g3, 2), s(0b100));
        assert_eq!(up(&g3, 0), s(0b111));
        let d5 = catalog("heyting-d5").unwrap();
        // {a} -> {a, c, 1}
        assert_eq!(upper_closure(&d5, Set::singleton(1)), s(0b11010));
        assert_eq!(up(&d5, 1), s(0b11010));
    }

    #[test]
    fn upper_set_validation() {
        let g3 = catalog("godel:3").unwrap();
        assert!(UpperSet::new(&g3, Set::from_bits(0b110)).is_ok());
        assert_eq!(UpperSet::new(&g3, Set::from_bits(0b011)), Err(Error::NotUpperSet(0b011)));
    }

    #[test]
    fn enumeration_counts() {
        let c2 = catalog("chain:2").unwrap();
        let sets = enumerate_upper_sets(&c2, 100).unwrap();
        assert_eq!(sets, vec![s(0), s(0b10), s(0b11)]);
        let g3 = catalog("godel:3").unwrap();
        assert_eq!(enumerate_upper_sets(&g3, 100).unwrap().len(), 4);
        let z3 = catalog("cyclic:3").unwrap();
        assert_eq!(enumerate_upper_sets(&z3, 100).unwrap().len(), 8);
        assert_eq!(enumerate_upper_sets(&z3, 7), Err(Error::CapExceeded { cap: 7 }));
    }

    #[test]
    fn umul_examples_g3() {
        let g3 = catalog("godel:3").unwrap();
        let q = Quantale::new(&g3, DEFAULT_CAP);
        let a = up(&g3, 1);
        assert_eq!(q.umul(a, a), s(0b110));
        assert_eq!(q.umul_product(a, a).unwrap(), s(0b110));
        let one = up(&g3, 2);
        for x in q.enumerate().unwrap() {
            assert_eq!(q.umul(x, one), x);
            assert_eq!(q.umul(one, x), x);
            assert_eq!(q.umul(UpperSet::EMPTY, x), UpperSet::EMPTY);
            assert_eq!(q.umul(x, UpperSet::EMPTY), UpperSet::EMPTY);
        }
    }

    #[test]
    fn residual_examples_g3() {
        let g3 = catalog("godel:3").unwrap();
        let q = Quantale::new(&g3, DEFAULT_CAP);
        let full = UpperSet::full(&g3);
        for x in q.enumerate().unwrap() {
            assert_eq!(q.ures_l(x, full), full);
            assert_eq!(q.ures_r(x, full), full);
            assert_eq!(q.ures_l(UpperSet::EMPTY, x), full);
            assert_eq!(q.ures_r(UpperSet::EMPTY, x), full);
        }
        // {a,1}·{1} = {a,1} ⊄ {1}, so nothing non-empty lies below either residual
        assert_eq!(q.ures_l(up(&g3, 1), up(&g3, 2)), UpperSet::EMPTY);
        assert_eq!(q.ures_r(up(&g3, 1), up(&g3, 2)), UpperSet::EMPTY);
        // {a,1}·A = A, so {a,1} is the largest Y with {a,1}·Y ⊆ {a,1}
        assert_eq!(q.ures_l(up(&g3, 1), up(&g3, 1)), up(&g3, 1));
    }

    #[test]
    fn inverse_residuals() {
        let g3 = catalog("godel:3").unwrap();
        let q = Quantale::new(&g3, DEFAULT_CAP);
        let full = UpperSet::full(&g3);
        let a = up(&g3, 1);
        assert_eq!(q.inv_res(a, UpperSet::EMPTY, FactorSide::Left).unwrap(), UpperSet::EMPTY);
        assert_eq!(q.inv_res(full, full, FactorSide::Left).unwrap(), s(0b100));
        assert_eq!(q.inv_res(full, full, FactorSide::Right).unwrap(), s(0b100));
        let t = catalog("trivial").unwrap();
        let q = Quantale::new(&t, DEFAULT_CAP);
        let one = UpperSet::full(&t);
        assert_eq!(q.inv_res(one, one, FactorSide::Left).unwrap(), one);
        assert_eq!(q.inv_res(one, one, FactorSide::Right).unwrap(), one);
        let big = catalog("prod(godel:3,godel:6)").unwrap();
        let q = Quantale::new(&big, DEFAULT_CAP);
        assert!(matches!(
            q.inv_res(UpperSet::EMPTY, UpperSet::EMPTY, FactorSide::Left),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn laws_on_small_algebras() {
        for name in ["trivial", "godel:3", "cyclic:2", "heyting-d5"] {
            let a = catalog(name).unwrap();
            let q = Quantale::new(&a, DEFAULT_CAP);
            let rep = q.check_laws().unwrap();
            assert!(rep.holds(), "{name}: {rep}");
            assert!(q.sample_laws(200, 7).holds(), "{name}");
        }
    }

    #[test]
    fn supercompact_and_balanced_g3() {
        let g3 = catalog("godel:3").unwrap();
        let q = Quantale::new(&g3, DEFAULT_CAP);
        for x in g3.elements() {
            assert!(q.is_supercompact(up(&g3, x)).unwrap());
        }
        assert!(!q.is_supercompact(UpperSet::EMPTY).unwrap());
        assert!(!q.is_balanced(UpperSet::EMPTY).unwrap());
        // on a chain every non-empty upper set is principal
        let d5 = catalog("heyting-d5").unwrap();
        let q = Quantale::new(&d5, DEFAULT_CAP);
        // {a, b, c, 1} = ↑a ∪ ↑b is not supercompact
        assert!(!q.is_supercompact(s(0b11110)).unwrap());
    }

    #[test]
    fn trivial_conuclei() {
        let g3 = catalog("godel:3").unwrap();
        let q = Quantale::new(&g3, DEFAULT_CAP);
        let sets = q.enumerate().unwrap();
        assert!(q.check_conucleus(&sets, |x| x).holds());
        assert_eq!(q.fixed_points(&sets, |x| x), sets);
        assert!(q.check_conucleus(&sets, |_| UpperSet::EMPTY).holds());
        assert_eq!(q.fixed_points(&sets, |_| UpperSet::EMPTY), vec![UpperSet::EMPTY]);
        // x ↦ A is not deflationary
        let rep = q.check_conucleus(&sets, |_| UpperSet::full(&g3));
        assert!(rep.is_violated("conucleus.deflationary"));
    }
}
