//! Filters of a quantum B-algebra and the conucleus `μ_F(X) = F ∩ X`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::bitset::Set;
use crate::classes::check_two_sided;
use crate::error::{Error, Result};
use crate::quantale::{enumerate_upper_sets, upper_closure, Quantale, UpperSet};
use crate::report::ClassReport;

/// A non-empty upper set closed under `y, y→z ∈ F ⇒ z ∈ F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Filter(UpperSet);

impl Filter {
    pub fn new(alg: &FiniteAlgebra, s: Set) -> Result<Self> {
        if is_filter(alg, s) {
            Ok(Filter(UpperSet::new_unchecked(s)))
        } else {
            Err(Error::NotAFilter(s.bits()))
        }
    }

    #[inline]
    pub fn upper(self) -> UpperSet {
        self.0
    }

    #[inline]
    pub fn set(self) -> Set {
        self.0.set()
    }

    #[inline]
    pub fn contains(self, x: Elem) -> bool {
        self.0.contains(x)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.len()
    }

    /// Always false; filters are non-empty.
    #[inline]
    pub fn is_empty(self) -> bool {
        false
    }

    pub fn is_subset(self, other: Filter) -> bool {
        self.set().is_subset(other.set())
    }
}

/// Rule form: non-empty, upward closed, and `y ∈ F, y→z ∈ F ⇒ z ∈ F`.
pub fn is_filter(alg: &FiniteAlgebra, s: Set) -> bool {
    !s.is_empty()
        && alg.poset().is_upward_closed(s)
        && s.iter().all(|y| alg.elements().all(|z| !s.contains(alg.to(y, z)) || s.contains(z)))
}

/// Idempotency form: non-empty, upward closed, and `F·F ⊆ F` in `U(A)`.
pub fn is_filter_by_product(alg: &FiniteAlgebra, s: Set) -> bool {
    if s.is_empty() || !alg.poset().is_upward_closed(s) {
        return false;
    }
    let f = UpperSet::new_unchecked(s);
    Quantale::new(alg, 0).umul(f, f).is_subset(f)
}

/// Least filter containing a non-empty set, by fixpoint closure under the
/// filter rule.
pub fn generated_filter(alg: &FiniteAlgebra, x: Set) -> Result<Filter> {
    if x.is_empty() {
        return Err(Error::PreconditionViolated("generating set must be non-empty".into()));
    }
    let mut s = upper_closure(alg, x).set();
    loop {
        let mut next = s;
        for y in s.iter() {
            for z in s.complement(alg.len()).iter() {
                if s.contains(alg.to(y, z)) {
                    next.insert(z);
                }
            }
        }
        let next = upper_closure(alg, next).set();
        if next == s {
            return Ok(Filter(UpperSet::new_unchecked(s)));
        }
        s = next;
    }
}

/// `[X) = {y | y ≥ x₁·…·xₙ, n ≥ 1, xᵢ ∈ X}`, the product form for residuated posets.
pub fn generated_filter_product(alg: &FiniteAlgebra, x: Set) -> Result<Filter> {
    alg.require_mul()?;
    if x.is_empty() {
        return Err(Error::PreconditionViolated("generating set must be non-empty".into()));
    }
    let mut words = x;
    loop {
        let mut next = words;
        for w in words.iter() {
            for g in x.iter() {
                next.insert(alg.mul(w, g));
            }
        }
        if next == words {
            break;
        }
        words = next;
    }
    Ok(Filter(upper_closure(alg, words)))
}

/// `[F ∪ {a})` by fixpoint closure.
pub fn extend_filter(alg: &FiniteAlgebra, f: Filter, a: Elem) -> Result<Filter> {
    if a >= alg.len() {
        return Err(Error::ElementOutOfRange(a));
    }
    if f.contains(a) {
        return Err(Error::PreconditionViolated(format!("{} already in the filter", alg.label(a))));
    }
    let mut s = f.set();
    s.insert(a);
    generated_filter(alg, s)
}

/// `[F ∪ {a}) = {y | y ≥ x₁·a·x₂·a·…·a·xₙ, xᵢ ∈ F}` for 2-sided residuated posets.
///
/// Words are grown one `·a·x` step at a time until no new product appears,
/// which takes at most `|A|` rounds.
pub fn extend_filter_words(alg: &FiniteAlgebra, f: Filter, a: Elem) -> Result<Filter> {
    if !check_two_sided(alg)? {
        return Err(Error::PreconditionViolated("algebra is not 2-sided".into()));
    }
    if f.contains(a) {
        return Err(Error::PreconditionViolated(format!("{} already in the filter", alg.label(a))));
    }
    let mut words = f.set();
    loop {
        let mut next = words;
        for w in words.iter() {
            let wa = alg.mul(w, a);
            for x in f.set().iter() {
                next.insert(alg.mul(wa, x));
            }
        }
        if next == words {
            break;
        }
        words = next;
    }
    Ok(Filter(upper_closure(alg, words)))
}

/// All filters of an algebra, ascending by size then bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterLattice {
    filters: Vec<Filter>,
}

impl FilterLattice {
    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Filter> + '_ {
        self.filters.iter().copied()
    }

    pub fn contains(&self, s: Set) -> bool {
        self.filters.iter().any(|f| f.set() == s)
    }

    /// Every non-empty pairwise intersection is again listed.
    pub fn is_intersection_closed(&self) -> bool {
        self.filters.iter().all(|f| {
            self.filters.iter().all(|g| {
                let m = f.set().intersection(g.set());
                m.is_empty() || self.contains(m)
            })
        })
    }
}

/// Scans `U(A)` for filters.
pub fn all_filters(alg: &FiniteAlgebra, cap: usize) -> Result<FilterLattice> {
    let filters = enumerate_upper_sets(alg, cap)?
        .into_iter()
        .filter(|u| is_filter(alg, u.set()))
        .map(Filter)
        .collect();
    Ok(FilterLattice { filters })
}

/// `μ_F(X) = F ∩ X`
#[inline]
pub fn mu(f: UpperSet, x: UpperSet) -> UpperSet {
    f.intersection(x)
}

/// The `μ_F` law suite over every filter `F` and upper sets `X`, `Y`.
pub fn mu_law_suite(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    mu_law_suite_with(alg, cap, mu)
}

/// [`mu_law_suite`] with a substitute for `μ`, so the harness itself can be
/// shown to catch a wrong map.
///
/// Law ids:
///
/// * `mu.L1` `μ_F(X)·μ_F(Y) ⊆ μ_F(X·Y)`
/// * `mu.L2.*` `μ_F` is a conucleus; its image is `U(F) = {U | U ⊆ F}`,
///   a subquantale
/// * `mu.P1` `μ_F(X) = μ_{μ_F(X)·μ_F(X)}(X)`
/// * `mu.P2` if `1 ∈ M⇝(M→X)` then `M·μ_F(M⇝(M→X))·M = M`, with `M = μ_F(X)`
/// * `mu.P3` `M` is a filter iff `1 ∈ M ∩ (M⇝(M→X))`
/// * `mu.C1`..`mu.C7` the identities for `1 ∈ X ∩ F`, with `R = M→X`, `L = M⇝X`
pub fn mu_law_suite_with(
    alg: &FiniteAlgebra,
    cap: usize,
    mu: impl Fn(UpperSet, UpperSet) -> UpperSet,
) -> Result<ClassReport> {
    if !alg.is_integral() {
        return Err(Error::PreconditionViolated("μ laws need an integral algebra".into()));
    }
    let one = alg.unit().expect("integral");
    let q = Quantale::new(alg, cap);
    let sets = q.enumerate()?;
    let filters: Vec<UpperSet> =
        sets.iter().copied().filter(|u| is_filter(alg, u.set())).collect();
    let mut rep = ClassReport::new("mu_laws");
    let m = |x, y| q.umul(x, y);

    for &f in &filters {
        let muf = |x| mu(f, x);
        for &x in &sets {
            for &y in &sets {
                let w = [f.set(), x.set(), y.set()];
                rep.check(m(muf(x), muf(y)).is_subset(muf(m(x, y))), "mu.L1", w);
            }
        }

        let conucleus = q.check_conucleus(&sets, muf);
        if let Some(v) = conucleus.violations().first() {
            let mut w = vec![f.set().into()];
            w.extend(v.witness.iter().copied());
            rep.record(&format!("mu.L2.{}", v.law), w);
        }
        let image: Vec<UpperSet> = {
            let mut v: Vec<UpperSet> = sets.iter().map(|&x| muf(x)).collect();
            v.sort_by_key(|u| u.set().canonical_key());
            v.dedup();
            v
        };
        let below: Vec<UpperSet> = sets.iter().copied().filter(|u| u.is_subset(f)).collect();
        rep.check(image == below, "mu.L2.image", [f.set()]);
        if let Some(v) = q.check_subquantale(&below).violations().first() {
            let mut w = vec![f.set().into()];
            w.extend(v.witness.iter().copied());
            rep.record("mu.L2.subquantale", w);
        }

        for &x in &sets {
            let w = [f.set(), x.set()];
            let mx = muf(x);
            rep.check(mx == mu(m(mx, mx), x), "mu.P1", w);
            let inner = q.ures_l(mx, q.ures_r(mx, x));
            if inner.contains(one) {
                rep.check(m(m(mx, muf(inner)), mx) == mx, "mu.P2", w);
            }
            let premise = mx.contains(one) && inner.contains(one);
            rep.check(is_filter(alg, mx.set()) == premise, "mu.P3", w);

            if !(x.contains(one) && f.contains(one)) {
                continue;
            }
            let r = q.ures_r(mx, x);
            let l = q.ures_l(mx, x);
            let (fr, fl) = (muf(r), muf(l));
            rep.check(m(mx, fl) == mx && mx == m(fr, mx), "mu.C1", w);
            rep.check(q.ures_r(fr, r) == r, "mu.C2", w);
            rep.check(q.ures_l(fl, l) == l, "mu.C3", w);
            rep.check(m(r, fr) == r, "mu.C4", w);
            rep.check(m(fl, l) == l, "mu.C5", w);
            rep.check(fr == m(fr, fr) && (!fr.contains(one) || is_filter(alg, fr.set())), "mu.C6", w);
            rep.check(fl == m(fl, fl) && (!fl.contains(one) || is_filter(alg, fl.set())), "mu.C7", w);
        }
    }
    Ok(rep)
}
