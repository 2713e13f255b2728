//! Prime filters of integral residuated ∨-semilattices.
//!
//! Primeness does not require properness, so `A` itself is prime in every
//! sense.

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::bitset::Set;
use crate::classes::{check_mtl, check_residuated, check_two_sided};
use crate::error::{Error, Result};
use crate::filters::{all_filters, extend_filter, Filter};
use crate::report::ClassReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeClassification {
    pub filter: Filter,
    /// `x→y ∈ F` or `y→x ∈ F` for all `x`, `y`.
    pub to_prime: bool,
    /// `x⇝y ∈ F` or `y⇝x ∈ F` for all `x`, `y`.
    pub lto_prime: bool,
    /// `x∨y ∈ F` implies `x ∈ F` or `y ∈ F`.
    pub vee_prime: bool,
    /// `to_prime && lto_prime`.
    pub prime: bool,
}

fn require_integral_residuated_join(alg: &FiniteAlgebra) -> Result<()> {
    if !check_residuated(alg)?.holds() {
        return Err(Error::PreconditionViolated("algebra is not residuated".into()));
    }
    if !alg.is_integral() {
        return Err(Error::PreconditionViolated("algebra is not integral".into()));
    }
    alg.join_table().map(|_| ())
}

fn require_two_sided_join(alg: &FiniteAlgebra) -> Result<()> {
    if !check_residuated(alg)?.holds() || !check_two_sided(alg)? {
        return Err(Error::PreconditionViolated("algebra is not 2-sided residuated".into()));
    }
    alg.join_table().map(|_| ())
}

fn classify_unchecked(alg: &FiniteAlgebra, f: Filter) -> PrimeClassification {
    let n = alg.len();
    let join = alg.join_table().expect("joins checked by caller");
    let pairs = || (0..n).flat_map(|x| (x..n).map(move |y| (x, y)));
    let to_prime = pairs().all(|(x, y)| f.contains(alg.to(x, y)) || f.contains(alg.to(y, x)));
    let lto_prime = pairs().all(|(x, y)| f.contains(alg.lto(x, y)) || f.contains(alg.lto(y, x)));
    let vee_prime = pairs().all(|(x, y)| !f.contains(join[x * n + y]) || f.contains(x) || f.contains(y));
    PrimeClassification { filter: f, to_prime, lto_prime, vee_prime, prime: to_prime && lto_prime }
}

/// All four primeness flags of `F` by exhaustive pair scan.
pub fn classify_filter(alg: &FiniteAlgebra, f: Filter) -> Result<PrimeClassification> {
    require_integral_residuated_join(alg)?;
    Ok(classify_unchecked(alg, f))
}

/// Classification of every filter, in filter-lattice order.
pub fn classify_all(alg: &FiniteAlgebra, cap: usize) -> Result<Vec<PrimeClassification>> {
    require_integral_residuated_join(alg)?;
    Ok(all_filters(alg, cap)?.iter().map(|f| classify_unchecked(alg, f)).collect())
}

/// `primes.to_in_vee`, `primes.lto_in_vee`, `primes.pf_in_vee` and
/// `primes.pf_is_meet` over all filters.
pub fn prime_class_inclusions(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    let mut rep = ClassReport::new("prime_class_inclusions");
    for c in classify_all(alg, cap)? {
        let w = [c.filter.set()];
        rep.check(!c.to_prime || c.vee_prime, "primes.to_in_vee", w);
        rep.check(!c.lto_prime || c.vee_prime, "primes.lto_in_vee", w);
        rep.check(!c.prime || c.vee_prime, "primes.pf_in_vee", w);
        rep.check(c.prime == (c.to_prime && c.lto_prime), "primes.pf_is_meet", w);
    }
    Ok(rep)
}

/// A maximal filter containing `F` and avoiding `a`, which must be ∨-prime.
///
/// Elements are tried once in ascending order: if `[G ∪ {e}) ∋ a` then the
/// same holds for every larger `G`, so a single pass saturates.
pub fn prime_extension(alg: &FiniteAlgebra, f: Filter, a: Elem) -> Result<Filter> {
    require_two_sided_join(alg)?;
    if a >= alg.len() {
        return Err(Error::ElementOutOfRange(a));
    }
    if f.contains(a) {
        return Err(Error::PreconditionViolated(format!("{} is in the filter", alg.label(a))));
    }
    let mut g = f;
    for e in alg.elements() {
        if g.contains(e) {
            continue;
        }
        let next = extend_filter(alg, g, e)?;
        if !next.contains(a) {
            g = next;
        }
    }
    let violated = |what: &str| {
        Error::TheoremViolated(format!(
            "extension {} of {} avoiding {} {what}",
            alg.render_set(g.set()),
            alg.render_set(f.set()),
            alg.label(a)
        ))
    };
    for e in alg.elements().filter(|&e| !g.contains(e)) {
        if !extend_filter(alg, g, e)?.contains(a) {
            return Err(violated("is not maximal"));
        }
    }
    if !classify_unchecked(alg, g).vee_prime {
        return Err(violated("is not ∨-prime"));
    }
    Ok(g)
}

/// Whether `F` is the intersection of the prime filters above it, under
/// both readings of "prime".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIntersection {
    /// `⋂{G ∈ PF_∨ | F ⊆ G}`
    pub vee: Set,
    /// `⋂{G ∈ PF | F ⊆ G}`
    pub pf: Set,
    pub vee_equal: bool,
    pub pf_equal: bool,
}

/// Intersections over an empty family are `A`.
pub fn intersection_of_primes(alg: &FiniteAlgebra, f: Filter, cap: usize) -> Result<PrimeIntersection> {
    let classes = classify_all(alg, cap)?;
    let meet = |pick: &dyn Fn(&PrimeClassification) -> bool| {
        classes
            .iter()
            .filter(|c| f.is_subset(c.filter) && pick(c))
            .fold(alg.full(), |acc, c| acc.intersection(c.filter.set()))
    };
    let vee = meet(&|c| c.vee_prime);
    let pf = meet(&|c| c.prime);
    Ok(PrimeIntersection { vee, pf, vee_equal: vee == f.set(), pf_equal: pf == f.set() })
}

/// The prime filter theorem and its corollary over every filter `F` and
/// every `a ∉ F`: `prime.extension` and `prime.intersection`.
pub fn prime_theorem_suite(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    require_two_sided_join(alg)?;
    let mut rep = ClassReport::new("prime_filter_theorem");
    for f in all_filters(alg, cap)?.iter() {
        for a in f.set().complement(alg.len()).iter() {
            match prime_extension(alg, f, a) {
                Ok(g) => rep.check(f.is_subset(g) && !g.contains(a), "prime.extension", [f.set(), Set::singleton(a)]),
                Err(Error::TheoremViolated(_)) => {
                    rep.record("prime.extension", [f.set(), Set::singleton(a)])
                }
                Err(e) => return Err(e),
            }
        }
        let meet = intersection_of_primes(alg, f, cap)?;
        rep.check(meet.vee_equal, "prime.intersection", [f.set()]);
    }
    Ok(rep)
}

/// `mtl.to_iff` (`→`-MTL ⇔ `PF_→ = PF_∨`), `mtl.lto_iff` and
/// `mtl.pseudo_iff` (`PF = PF_∨`).
///
/// A witness is the first filter on which the two classes differ, or empty
/// when the classes agree but the algebra is not MTL.
pub fn mtl_iff_theorem(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    let classes = classify_all(alg, cap)?;
    let flags = check_mtl(alg)?;
    let mut rep = ClassReport::new("mtl_iff");
    let sides: [(&str, bool, fn(&PrimeClassification) -> bool); 3] = [
        ("mtl.to_iff", flags.to_mtl, |c| c.to_prime),
        ("mtl.lto_iff", flags.lto_mtl, |c| c.lto_prime),
        ("mtl.pseudo_iff", flags.pseudo_mtl, |c| c.prime),
    ];
    for (law, mtl, class) in sides {
        let differ = classes.iter().find(|c| class(c) != c.vee_prime);
        if mtl != differ.is_none() {
            rep.record(law, differ.map(|c| c.filter.set()));
        }
    }
    Ok(rep)
}
