//! Pseudo-hoop theory: polars, the polar-product embedding, `ν_F`, normal
//! filters and subdirect-reducibility witnesses.
//!
//! `x∨y = 1` always means that the unit is the only common upper bound of
//! `x` and `y`; no join-semilattice structure is assumed.

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::bitset::{submasks, Set};
use crate::classes::check_pseudo_hoop;
use crate::error::{Error, Result};
use crate::filters::{all_filters, generated_filter, is_filter, mu, Filter};
use crate::quantale::{UpperSet, DEFAULT_CAP};
use crate::report::ClassReport;

/// Largest carrier for suites quantified over all subsets.
pub const SUBSET_SUITE_MAX_CARRIER: usize = 12;

/// Fails with [`Error::NotAHoop`] unless every pseudo-hoop axiom holds.
pub fn require_hoop(alg: &FiniteAlgebra) -> Result<Elem> {
    if !alg.has_mul() || !check_pseudo_hoop(alg)?.holds() {
        return Err(Error::NotAHoop);
    }
    alg.require_unit()
}

fn require_small(alg: &FiniteAlgebra) -> Result<()> {
    if alg.len() > SUBSET_SUITE_MAX_CARRIER {
        return Err(Error::CapExceeded { cap: SUBSET_SUITE_MAX_CARRIER });
    }
    Ok(())
}

/// `M⊥ = {x | x∨y = 1 for all y ∈ M}` without any checks.
pub fn polar_set(alg: &FiniteAlgebra, m: Set) -> Set {
    alg.elements()
        .filter(|&x| m.iter().all(|y| alg.join_is_unit(x, y)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polar {
    pub base: Set,
    pub polar_set: Filter,
}

/// `M⊥`, checked to be a filter with `M ⊆ M⊥⊥` and `M⊥ = M⊥⊥⊥`.
pub fn polar(alg: &FiniteAlgebra, m: Set) -> Result<Polar> {
    require_hoop(alg)?;
    if !m.is_subset(alg.full()) {
        return Err(Error::ElementOutOfRange(m.iter().last().unwrap_or(0)));
    }
    let p = polar_set(alg, m);
    let pp = polar_set(alg, p);
    if !m.is_subset(pp) || polar_set(alg, pp) != p {
        return Err(Error::TheoremViolated(format!("polar closure fails at {}", alg.render_set(m))));
    }
    let polar_set = Filter::new(alg, p).map_err(|_| {
        Error::TheoremViolated(format!("polar of {} is not a filter", alg.render_set(m)))
    })?;
    Ok(Polar { base: m, polar_set })
}

/// Polar properties over every subset `M` (and every `N ⊇ M`):
/// `polar.antitone`, `polar.extensive`, `polar.triple`, `polar.filter`.
pub fn polar_laws(alg: &FiniteAlgebra) -> Result<ClassReport> {
    require_hoop(alg)?;
    require_small(alg)?;
    let full = alg.full();
    let polars: Vec<Set> = (0..1u64 << alg.len()).map(|b| polar_set(alg, Set::from_bits(b))).collect();
    let pol = |s: Set| polars[s.bits() as usize];
    let mut rep = ClassReport::new("polar_laws");
    for b in 0..1u64 << alg.len() {
        let m = Set::from_bits(b);
        let p = pol(m);
        for n in submasks(full.difference(m)) {
            let n = n.union(m);
            rep.check(pol(n).is_subset(p), "polar.antitone", [m, n]);
        }
        rep.check(m.is_subset(pol(p)), "polar.extensive", [m]);
        rep.check(pol(pol(p)) == p, "polar.triple", [m]);
        rep.check(is_filter(alg, p), "polar.filter", [m]);
    }
    Ok(rep)
}

/// For every pair with `x∨y = 1`: `coprime.mul` (`x·y = x∧y = y·x`) and
/// `coprime.implication` (`x→y = x⇝y = y`).
pub fn coprime_laws(alg: &FiniteAlgebra) -> Result<ClassReport> {
    require_hoop(alg)?;
    let mut rep = ClassReport::new("coprime_laws");
    for x in alg.elements() {
        for y in alg.elements() {
            if !alg.join_is_unit(x, y) {
                continue;
            }
            let xy = alg.mul(x, y);
            rep.check(
                alg.meet_opt(x, y) == Some(xy) && alg.mul(y, x) == xy,
                "coprime.mul",
                [x, y],
            );
            rep.check(alg.to(x, y) == y && alg.lto(x, y) == y, "coprime.implication", [x, y]);
        }
    }
    Ok(rep)
}

/// `f(x, y) = x∧y` on `M⊥ × M⊥⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEmbedding {
    pub base: Set,
    pub left: Set,
    pub right: Set,
    /// `(x, y, f(x, y))` in lexicographic order of `(x, y)`.
    pub map: Vec<(Elem, Elem, Elem)>,
}

impl PairEmbedding {
    pub fn apply(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.map.iter().find(|&&(a, b, _)| (a, b) == (x, y)).map(|&(_, _, z)| z)
    }

    /// The first pair mapped to `z`.
    pub fn preimage(&self, z: Elem) -> Option<(Elem, Elem)> {
        self.map.iter().find(|&&(_, _, c)| c == z).map(|&(a, b, _)| (a, b))
    }

    /// `f[M⊥ × M⊥⊥]`, which equals `M⊥·M⊥⊥`.
    pub fn image(&self) -> Set {
        self.map.iter().map(|&(_, _, z)| z).collect()
    }
}

/// Builds `f` and checks `embed.meet`, `embed.injective`, `embed.mul`,
/// `embed.to`, `embed.lto` and `embed.image` (image equals the elementwise
/// product `M⊥·M⊥⊥`).
pub fn polar_embedding(alg: &FiniteAlgebra, m: Set) -> Result<(PairEmbedding, ClassReport)> {
    require_hoop(alg)?;
    let left = polar_set(alg, m);
    let right = polar_set(alg, left);
    let mut rep = ClassReport::new("polar_embedding");
    let mut map = Vec::with_capacity(left.len() * right.len());
    for x in left.iter() {
        for y in right.iter() {
            match alg.meet_opt(x, y) {
                Some(z) => map.push((x, y, z)),
                None => rep.record("embed.meet", [x, y]),
            }
        }
    }
    let emb = PairEmbedding { base: m, left, right, map };
    if !rep.holds() {
        return Ok((emb, rep));
    }
    let f = |x: Elem, y: Elem| alg.meet_opt(x, y).expect("meets checked above");
    for &(x1, y1, z1) in &emb.map {
        for &(x2, y2, z2) in &emb.map {
            let w = [x1, y1, x2, y2];
            rep.check(z1 != z2 || (x1, y1) == (x2, y2), "embed.injective", w);
            rep.check(alg.mul(z1, z2) == f(alg.mul(x1, x2), alg.mul(y1, y2)), "embed.mul", w);
            rep.check(alg.to(z1, z2) == f(alg.to(x1, x2), alg.to(y1, y2)), "embed.to", w);
            rep.check(alg.lto(z1, z2) == f(alg.lto(x1, x2), alg.lto(y1, y2)), "embed.lto", w);
        }
    }
    let product = LiftedSets::new(alg).mul(left, right);
    rep.check(emb.image() == product, "embed.image", [m]);
    Ok((emb, rep))
}

/// Elementwise set operations `X·Y`, `X→Y`, `X⇝Y` on raw subsets.
#[derive(Clone, Copy)]
pub struct LiftedSets<'a> {
    alg: &'a FiniteAlgebra,
}

impl<'a> LiftedSets<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Self {
        LiftedSets { alg }
    }

    fn lift(self, x: Set, y: Set, op: impl Fn(Elem, Elem) -> Elem) -> Set {
        x.iter().flat_map(|a| y.iter().map(move |b| (a, b))).map(|(a, b)| op(a, b)).collect()
    }

    pub fn mul(self, x: Set, y: Set) -> Set {
        self.lift(x, y, |a, b| self.alg.mul(a, b))
    }

    pub fn to(self, x: Set, y: Set) -> Set {
        self.lift(x, y, |a, b| self.alg.to(a, b))
    }

    pub fn lto(self, x: Set, y: Set) -> Set {
        self.lift(x, y, |a, b| self.alg.lto(a, b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuResult {
    /// `ν_F(X)`, the upper bounds of `X` inside `F`.
    pub bounds: UpperSet,
    /// `ν̂_F(X)`, the least element of `bounds` if any.
    pub least: Option<Elem>,
}

/// `{a ∈ F | x ≤ a for all x ∈ X}`, straight from the definition.
pub fn nu_direct(alg: &FiniteAlgebra, f: Filter, x: Set) -> Set {
    f.set().iter().filter(|&a| x.iter().all(|b| alg.leq(b, a))).collect()
}

/// `μ_F` applied to the set of all upper bounds of `X`.
pub fn nu_via_mu(alg: &FiniteAlgebra, f: Filter, x: Set) -> Set {
    mu(f.upper(), UpperSet::new_unchecked(alg.poset().upper_bounds(x))).set()
}

/// `ν_F(X)` and `ν̂_F(X)`; both routes are computed and must agree.
pub fn nu(alg: &FiniteAlgebra, f: Filter, x: Set) -> Result<NuResult> {
    let direct = nu_direct(alg, f, x);
    if direct != nu_via_mu(alg, f, x) {
        return Err(Error::TheoremViolated(format!(
            "ν routes disagree at F = {}, X = {}",
            alg.render_set(f.set()),
            alg.render_set(x)
        )));
    }
    Ok(NuResult {
        bounds: UpperSet::new_unchecked(direct),
        least: alg.poset().least_of(direct),
    })
}

/// For a filter `F` and `X ⊆ A`:
///
/// * `nu.to_filter`, `nu.lto_filter`: `ν_F(ν_F(X)→X)` and `ν_F(ν_F(X)⇝X)`
///   (lifted operations) are filters
/// * `nu.to_absorb`, `nu.lto_absorb`: `ν_F(ν_F(X)→X)·ν_F(X) = ν_F(X)` and
///   `ν_F(X)·ν_F(ν_F(X)⇝X) = ν_F(X)`
/// * for `X = {x}` with `ν̂_F(x)` defined: `nu.hat_to` / `nu.hat_lto`,
///   i.e. `z = ν̂_F(ν̂_F(x)→x)` exists, is the least element of
///   `ν_F(ν_F(x)→x)`, and `z·z = z`
pub fn nu_filter_theorem(alg: &FiniteAlgebra, f: Filter, x: Set) -> Result<ClassReport> {
    require_hoop(alg)?;
    let lifted = LiftedSets::new(alg);
    let mut rep = ClassReport::new("nu_filter_theorem");
    let w = [f.set(), x];
    let nx = nu(alg, f, x)?;
    let b = nx.bounds.set();

    let to_side = nu(alg, f, lifted.to(b, x))?;
    rep.check(is_filter(alg, to_side.bounds.set()), "nu.to_filter", w);
    rep.check(lifted.mul(to_side.bounds.set(), b) == b, "nu.to_absorb", w);
    let lto_side = nu(alg, f, lifted.lto(b, x))?;
    rep.check(is_filter(alg, lto_side.bounds.set()), "nu.lto_filter", w);
    rep.check(lifted.mul(b, lto_side.bounds.set()) == b, "nu.lto_absorb", w);

    if let (Some(e), Some(hat)) = (x.first().filter(|_| x.len() == 1), nx.least) {
        let sides = [
            ("nu.hat_to", alg.to(hat, e), to_side),
            ("nu.hat_lto", alg.lto(hat, e), lto_side),
        ];
        for (law, r, side) in sides {
            let z = nu(alg, f, Set::singleton(r))?.least;
            let ok = matches!(z, Some(z) if side.least == Some(z) && alg.mul(z, z) == z);
            rep.check(ok, law, w);
        }
    }
    Ok(rep)
}

/// `x→y ∈ F ⇔ x⇝y ∈ F` for all `x`, `y`.
pub fn is_normal_filter(alg: &FiniteAlgebra, f: Filter) -> bool {
    alg.elements()
        .all(|x| alg.elements().all(|y| f.contains(alg.to(x, y)) == f.contains(alg.lto(x, y))))
}

/// For every filter: `normal.least_exists` (finite hoop filters are
/// ∧-closed), and for its least element `a`: `normal.idempotent` (`a·a = a`),
/// `normal.central` (`a·x = x·a`), `normal.filter`.
pub fn least_element_normal(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    require_hoop(alg)?;
    let mut rep = ClassReport::new("least_element_normal");
    for f in all_filters(alg, cap)?.iter() {
        let Some(a) = alg.poset().least_of(f.set()) else {
            rep.record("normal.least_exists", [f.set()]);
            continue;
        };
        rep.check(alg.mul(a, a) == a, "normal.idempotent", [a]);
        if let Some(x) = alg.elements().find(|&x| alg.mul(a, x) != alg.mul(x, a)) {
            rep.record("normal.central", [a, x]);
        }
        rep.check(is_normal_filter(alg, f), "normal.filter", [f.set()]);
    }
    Ok(rep)
}

/// Facts certifying that a pseudo-hoop is subdirectly reducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdirectWitness {
    pub base: Set,
    /// An element outside `H = M⊥·M⊥⊥`.
    pub x: Elem,
    /// `ν̂_H(ν̂_H(x)→x)`, idempotent.
    pub y: Elem,
    pub y1: Elem,
    pub y2: Elem,
    /// `[{y1})`
    pub f1: Filter,
    /// `[{y2})`
    pub f2: Filter,
}

/// If some `x ∉ H = M⊥·M⊥⊥` has `ν̂_H(x)` defined, rebuilds the
/// decomposition `y = y1∧y2` and checks every fact it rests on.
///
/// Any failing fact yields [`Error::DecompositionFailed`].
pub fn subdirect_witness(alg: &FiniteAlgebra, m: Set) -> Result<Option<SubdirectWitness>> {
    let one = require_hoop(alg)?;
    let (emb, rep) = polar_embedding(alg, m)?;
    let fail = |what: &str| Error::DecompositionFailed(format!("M = {}: {what}", alg.render_set(m)));
    if !rep.holds() {
        return Err(fail("the polar pair does not embed"));
    }
    let h = Filter::new(alg, emb.image()).map_err(|_| fail("M⊥·M⊥⊥ is not a filter"))?;
    let hat = |s: Set| nu(alg, h, s).map(|r| r.least);
    let mut found = None;
    for x in h.set().complement(alg.len()).iter() {
        if let Some(b) = hat(Set::singleton(x))? {
            found = Some((x, b));
            break;
        }
    }
    let Some((x, b)) = found else { return Ok(None) };
    let y = hat(Set::singleton(alg.to(b, x)))?.ok_or_else(|| fail("ν̂_H(ν̂_H(x)→x) is undefined"))?;
    if alg.mul(y, y) != y {
        return Err(fail("y is not idempotent"));
    }
    let (y1, y2) = emb.preimage(y).ok_or_else(|| fail("y has no preimage"))?;
    if y1 == one || y2 == one {
        return Err(fail("a component of y is the unit"));
    }
    if alg.mul(y1, y1) != y1 || alg.mul(y2, y2) != y2 {
        return Err(fail("a component of y is not idempotent"));
    }
    let f1 = generated_filter(alg, Set::singleton(y1))?;
    let f2 = generated_filter(alg, Set::singleton(y2))?;
    if !is_normal_filter(alg, f1) || !is_normal_filter(alg, f2) {
        return Err(fail("a generated filter is not normal"));
    }
    if f1.set().intersection(f2.set()) != Set::singleton(one) {
        return Err(fail("the generated filters meet above {1}"));
    }
    Ok(Some(SubdirectWitness { base: m, x, y, y1, y2, f1, f2 }))
}

/// The first witness over all subsets `M` in ascending bitmask order.
pub fn find_subdirect_witness(alg: &FiniteAlgebra) -> Result<Option<SubdirectWitness>> {
    require_small(alg)?;
    for b in 0..1u64 << alg.len() {
        if let Some(w) = subdirect_witness(alg, Set::from_bits(b))? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Every pseudo-hoop law of this module over all subsets `M`, all filters
/// `F` and all subsets `X`.
pub fn hoop_suite(alg: &FiniteAlgebra) -> Result<ClassReport> {
    require_hoop(alg)?;
    require_small(alg)?;
    let mut rep = ClassReport::new("hoop_suite");
    rep.absorb(polar_laws(alg)?);
    rep.absorb(coprime_laws(alg)?);
    for b in 0..1u64 << alg.len() {
        let m = Set::from_bits(b);
        let (_, r) = polar_embedding(alg, m)?;
        rep.absorb(r);
    }
    for f in all_filters(alg, DEFAULT_CAP)?.iter() {
        for b in 0..1u64 << alg.len() {
            let x = Set::from_bits(b);
            rep.check(nu_direct(alg, f, x) == nu_via_mu(alg, f, x), "nu.routes", [f.set(), x]);
            rep.absorb(nu_filter_theorem(alg, f, x)?);
        }
    }
    rep.absorb(least_element_normal(alg, DEFAULT_CAP)?);
    Ok(rep)
}
