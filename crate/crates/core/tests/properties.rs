mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use qbforge::filters::{all_filters, extend_filter, generated_filter, generated_filter_product, mu};
use qbforge::forge::canon::{canonical_key, isomorphic};
use qbforge::forge::catalog::SHIPPED;
use qbforge::forge::{enumerate_algebras, SearchSpec, TargetClass};
use qbforge::format::{parse_algebra, to_text};
use qbforge::primes::{classify_filter, prime_extension};
use qbforge::quantale::{upper_closure, DEFAULT_CAP};
use qbforge::{catalog, validate_poset, FiniteAlgebra, Filter, Quantale, Set};

use common::*;

/// Integral QB-algebras up to 4 elements, pseudo-hoops and residuated
/// ∨-semilattices up to 5, and the small catalog entries.
fn pool() -> &'static [FiniteAlgebra] {
    static POOL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = Vec::new();
        for (t, n) in [(TargetClass::IntegralQb, 4), (TargetClass::PseudoHoop, 5), (TargetClass::ResiduatedJoin, 5)] {
            v.extend(enumerate_algebras(&SearchSpec::new(t, n)).unwrap());
        }
        v.extend(SHIPPED.iter().map(|n| catalog(n).unwrap()).filter(|a| a.len() <= 9));
        v
    })
}

fn residuated_join() -> &'static [FiniteAlgebra] {
    static POOL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| enumerate_algebras(&SearchSpec::new(TargetClass::ResiduatedJoin, 5)).unwrap())
}

fn pick(pool: &[FiniteAlgebra], i: usize) -> &FiniteAlgebra {
    &pool[i % pool.len()]
}

fn up(a: &FiniteAlgebra, bits: u64) -> qbforge::UpperSet {
    upper_closure(a, Set::from_bits(bits & full(a.len())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn umul_matches_naive_and_associates(i in any::<usize>(), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let a = pick(pool(), i);
        let q = Quantale::new(a, DEFAULT_CAP);
        let (x, y, z) = (up(a, x), up(a, y), up(a, z));
        let xy = q.umul(x, y);
        prop_assert_eq!(xy.set().bits(), mul(a, x.set().bits(), y.set().bits()));
        prop_assert_eq!(q.umul(xy, z), q.umul(x, q.umul(y, z)));
        prop_assert_eq!(q.umul(x.union(y), z), q.umul(x, z).union(q.umul(y, z)));
    }

    #[test]
    fn residuals_satisfy_adjunction(i in any::<usize>(), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let a = pick(pool(), i);
        let q = Quantale::new(a, DEFAULT_CAP);
        let (x, y, z) = (up(a, x), up(a, y), up(a, z));
        let p = q.umul(x, y).is_subset(z);
        prop_assert_eq!(p, x.is_subset(q.ures_r(y, z)));
        prop_assert_eq!(p, y.is_subset(q.ures_l(x, z)));
    }

    #[test]
    fn generated_filter_is_least(i in any::<usize>(), x in 1u64..) {
        let a = pick(pool(), i);
        let x = Set::from_bits(x & full(a.len()));
        prop_assume!(!x.is_empty());
        let g = generated_filter(a, x).unwrap();
        let least = filters(a).into_iter().filter(|&f| f & x.bits() == x.bits()).fold(full(a.len()), |acc, f| acc & f);
        prop_assert_eq!(g.set().bits(), least);
        if a.has_mul() {
            prop_assert_eq!(generated_filter_product(a, x).unwrap(), g);
        }
    }

    #[test]
    fn filters_are_closed_under_intersection(i in any::<usize>()) {
        let a = pick(pool(), i);
        let lat = all_filters(a, DEFAULT_CAP).unwrap();
        prop_assert!(lat.is_intersection_closed());
        let naive = filters(a);
        prop_assert_eq!(lat.len(), naive.len());
    }

    #[test]
    fn mu_is_a_conucleus(i in any::<usize>(), fi in any::<usize>(), x in any::<u64>(), y in any::<u64>()) {
        let a = pick(pool(), i);
        let q = Quantale::new(a, DEFAULT_CAP);
        let fs = all_filters(a, DEFAULT_CAP).unwrap();
        let f = fs.filters()[fi % fs.len()].upper();
        let (x, y) = (up(a, x), up(a, y));
        let (mx, my) = (mu(f, x), mu(f, y));
        prop_assert!(mx.is_subset(x));
        prop_assert_eq!(mu(f, mx), mx);
        prop_assert!(mu(f, x.intersection(y)).is_subset(mx));
        prop_assert!(q.umul(mx, my).is_subset(mu(f, q.umul(x, y))));
    }

    #[test]
    fn extension_is_maximal_and_vee_prime(i in any::<usize>(), fi in any::<usize>(), ai in any::<usize>()) {
        let a = pick(residuated_join(), i);
        let fs = all_filters(a, DEFAULT_CAP).unwrap();
        let f = fs.filters()[fi % fs.len()];
        let outside: Vec<usize> = f.set().complement(a.len()).iter().collect();
        prop_assume!(!outside.is_empty());
        let x = outside[ai % outside.len()];
        let g = prime_extension(a, f, x).unwrap();
        prop_assert!(f.is_subset(g) && !g.contains(x));
        prop_assert!(classify_filter(a, g).unwrap().vee_prime);
        prop_assert!(vee_prime(a, g.set().bits()));
        for h in fs.iter() {
            prop_assert!(!(g.is_subset(h) && h != g && !h.contains(x)));
        }
        let bigger = extend_filter(a, f, x).unwrap();
        prop_assert!(bigger.contains(x) && f.is_subset(bigger));
    }

    #[test]
    fn relabeling_preserves_structure(i in any::<usize>(), seed in any::<u64>()) {
        let a = pick(pool(), i);
        prop_assume!(a.len() <= 6);
        let mut perm: Vec<usize> = (0..a.len()).collect();
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let b = a.permuted(&perm);
        prop_assert_eq!(canonical_key(&b).0, canonical_key(a).0);
        prop_assert!(isomorphic(a, &b));
        let text = to_text(&b);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(to_text(&back), text);
        prop_assert_eq!(&back, &b);
    }

    #[test]
    fn closure_of_any_relation_validates_iff_antisymmetric(n in 1usize..6, bits in any::<u64>()) {
        let mut m = vec![vec![false; n]; n];
        for (x, row) in m.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                *cell = x == y || bits >> (x * n + y) & 1 == 1;
            }
        }
        for k in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if m[x][k] && m[k][y] {
                        m[x][y] = true;
                    }
                }
            }
        }
        let antisym = (0..n).all(|x| (0..n).all(|y| x == y || !(m[x][y] && m[y][x])));
        prop_assert_eq!(validate_poset(&m).is_ok(), antisym);
    }

    #[test]
    fn filter_constructor_agrees_with_naive(i in any::<usize>(), s in any::<u64>()) {
        let a = pick(pool(), i);
        let s = s & full(a.len());
        prop_assert_eq!(Filter::new(a, Set::from_bits(s)).is_ok(), is_filter(a, s));
    }
}
