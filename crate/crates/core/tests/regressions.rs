//! Frozen results of exhaustive searches. Each count was cross-checked by a
//! second route (unpruned scans, naive recomputation) before being pinned.

mod common;

use qbforge::forge::search::{enumerate_independent, sweep};
use qbforge::forge::{canon::isomorphic, enumerate_algebras, find_counterexamples, run_sweep, SearchSpec, TargetClass};
use qbforge::quantale::DEFAULT_CAP;
use qbforge::{catalog, FiniteAlgebra, Quantale, Set, UpperSet};

fn count(t: TargetClass, n: usize, dedup: bool) -> usize {
    let spec = SearchSpec { min_size: n, dedup, ..SearchSpec::new(t, n) };
    enumerate_algebras(&spec).unwrap().len()
}

fn find(t: TargetClass, n: usize, pred: &str) -> Vec<FiniteAlgebra> {
    let spec = SearchSpec { predicate: Some(pred.into()), ..SearchSpec::new(t, n) };
    find_counterexamples(&spec).unwrap().into_iter().map(|f| f.algebra).collect()
}

#[test]
fn class_counts_by_size() {
    // (class, sizes 1.., up to isomorphism, labeled)
    let table: &[(TargetClass, &[usize], &[usize])] = &[
        (TargetClass::QuantumB, &[1, 3, 23], &[1, 6, 129]),
        (TargetClass::Residuated, &[1, 3, 16], &[1, 6, 93]),
        (TargetClass::IntegralQb, &[1, 1, 3, 17, 145], &[1, 2, 15, 340, 15275]),
        (TargetClass::IntegralResiduated, &[1, 1, 2, 9, 49], &[1, 2, 12, 204, 5700]),
        (TargetClass::ResiduatedJoin, &[1, 1, 2, 9, 49], &[1, 2, 12, 204, 5700]),
        (TargetClass::PseudoHoop, &[1, 1, 2, 5, 10], &[1, 2, 12, 108, 1080]),
    ];
    for &(t, iso, labeled) in table {
        for (i, (&ci, &cl)) in iso.iter().zip(labeled).enumerate() {
            let n = i + 1;
            assert_eq!(count(t, n, true), ci, "{t} n={n} up to iso");
            assert_eq!(count(t, n, false), cl, "{t} n={n} labeled");
        }
    }
}

#[test]
fn derivation_matches_independent_tables() {
    for t in TargetClass::ALL {
        for n in 1..=2 {
            let spec = SearchSpec { min_size: n, dedup: false, ..SearchSpec::new(t, n) };
            assert_eq!(enumerate_algebras(&spec).unwrap().len(), enumerate_independent(t, n).unwrap().len(), "{t} {n}");
        }
    }
}

#[test]
fn finite_pseudo_hoops_are_commutative() {
    assert!(find(TargetClass::PseudoHoop, 3, "not commutative").is_empty());
    assert!(find(TargetClass::PseudoHoop, 5, "not commutative").is_empty());
    assert_eq!(find(TargetClass::IntegralResiduated, 4, "not commutative").len(), 2);
    assert_eq!(find(TargetClass::IntegralQb, 4, "not commutative").len(), 3);
}

#[test]
fn nonnormal_filters_need_noncommutativity() {
    let nonnormal = find(TargetClass::IntegralQb, 4, "nonnormal_filter");
    let noncomm = find(TargetClass::IntegralQb, 4, "not commutative");
    let names = |v: &[FiniteAlgebra]| v.iter().map(|a| a.name().to_string()).collect::<Vec<_>>();
    assert_eq!(names(&nonnormal), names(&noncomm));
    assert!(find(TargetClass::PseudoHoop, 5, "nonnormal_filter").is_empty());
    assert_eq!(find(TargetClass::IntegralQb, 5, "nonnormal_filter").len(), 57);
}

/// Up to size 5 the construction applies to a single pseudo-hoop: the
/// four-element Boolean algebra with a new bottom adjoined.
#[test]
fn subdirect_witnesses_up_to_five() {
    let found = find(TargetClass::PseudoHoop, 5, "subdirect_witness");
    assert_eq!(found.len(), 1);
    let a = &found[0];
    assert_eq!(a.len(), 5);
    assert!(a.bottom().is_some() && a.is_commutative());
    let w = qbforge::hoops::find_subdirect_witness(a).unwrap().unwrap();
    let l = |x: usize| a.label(x).to_string();
    assert_eq!(a.render_set(w.base), "{a}");
    assert_eq!([l(w.x), l(w.y), l(w.y1), l(w.y2)], ["d", "c", "b", "a"]);
    assert_eq!(w.f1.set().intersection(w.f2.set()), Set::singleton(a.unit().unwrap()));
    // Everywhere else M⊥·M⊥⊥ is the whole carrier for every M.
    for name in ["prod(chain:2,chain:2)", "heyting-d5", "godel:5", "lukasiewicz:5", "prod(godel:3,godel:3)"] {
        assert!(qbforge::hoops::find_subdirect_witness(&catalog(name).unwrap()).unwrap().is_none(), "{name}");
    }
    assert!(find(TargetClass::PseudoHoop, 4, "subdirect_witness").is_empty());
}

#[test]
fn prime_separators_up_to_five() {
    let found = find(TargetClass::ResiduatedJoin, 5, "PF_to != PF_vee");
    assert_eq!(found.len(), 3);
    let d5 = catalog("heyting-d5").unwrap();
    assert!(found.iter().any(|a| isomorphic(a, &d5)));
    assert!(find(TargetClass::ResiduatedJoin, 5, "to_mtl and PF_to != PF_vee").is_empty());
    let not_mtl = find(TargetClass::ResiduatedJoin, 5, "not pseudo_mtl");
    let names = |v: &[FiniteAlgebra]| v.iter().map(|a| a.name().to_string()).collect::<Vec<_>>();
    assert_eq!(names(&not_mtl), names(&find(TargetClass::ResiduatedJoin, 5, "PF != PF_vee")));
}

#[test]
fn theorem_predicates_find_nothing() {
    assert!(find(TargetClass::PseudoHoop, 5, "not coprime_laws").is_empty());
    assert!(find(TargetClass::ResiduatedJoin, 5, "not mtl_iff").is_empty());
    assert!(find(TargetClass::IntegralQb, 4, "false").is_empty());
}

#[test]
fn size_five_sweep_fails_only_balanced_supercompact() {
    let algs = sweep(5).unwrap();
    assert_eq!(algs.len(), 167);
    let rep = run_sweep(&algs, DEFAULT_CAP).unwrap();
    let failures = rep.failures();
    assert!(failures.iter().all(|(s, _)| *s == "supercompact"), "{failures:?}");
    assert_eq!(failures.len(), 107);
    for e in &rep.entries {
        for v in &e.verdicts {
            assert!(v.violations.iter().all(|w| w.law == "q.balanced_supercompact"), "{}: {v:?}", e.name);
        }
    }
    // Every algebra without a least element fails, since its full upper set is balanced.
    let bottomless = algs.iter().filter(|a| a.bottom().is_none()).count();
    assert_eq!(bottomless, 80);
    for a in algs.iter().filter(|a| a.bottom().is_none()) {
        assert!(failures.iter().any(|(_, n)| *n == a.name()));
    }
}

fn labels(a: &FiniteAlgebra, ls: &[&str]) -> UpperSet {
    let s: Set = ls.iter().map(|l| a.index_of(l).unwrap()).collect();
    UpperSet::new(a, s).unwrap()
}

/// The products `R·μ_F(R)` and `μ_F(L)·L` reproduce `R` and `L`; with the
/// factors swapped they do not, as this algebra shows.
#[test]
fn conucleus_product_order_matters() {
    let algs = sweep(4).unwrap();
    let a = algs.iter().find(|a| a.name() == "integral-qb-4-4").unwrap();
    assert!(!a.is_commutative());
    let q = Quantale::new(a, DEFAULT_CAP);
    let x = labels(a, &["1", "a", "b"]);

    let f = labels(a, &["1", "b"]);
    let mx = f.intersection(x);
    let r = q.ures_r(mx, x);
    let fr = f.intersection(r);
    assert_eq!(q.umul(r, fr), r);
    assert_ne!(q.umul(fr, r), r);

    let f = labels(a, &["1", "a"]);
    let mx = f.intersection(x);
    let l = q.ures_l(mx, x);
    let fl = f.intersection(l);
    assert_eq!(q.umul(fl, l), l);
    assert_ne!(q.umul(l, fl), l);

    // Same facts through the naive product.
    let us = common::upper_sets(a);
    let bits = |u: UpperSet| u.set().bits();
    let f = bits(labels(a, &["1", "b"]));
    let mx = f & bits(x);
    let r = common::res_right(a, &us, mx, bits(x));
    assert_ne!(common::mul(a, f & r, r), r);
}

#[test]
fn unit_filter_is_always_normal() {
    for a in sweep(5).unwrap() {
        let one = qbforge::Filter::new(&a, Set::singleton(a.unit().unwrap())).unwrap();
        assert!(qbforge::hoops::is_normal_filter(&a, one), "{}", a.name());
    }
}
