//! Canonical relabeling for isomorphism dedup: the permutation giving the
//! lexicographically smallest encoding wins.

use itertools::Itertools;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::order::Poset;

/// Largest carrier the factorial scan is allowed on.
pub const MAX_CANON_SIZE: usize = 8;

fn perms(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= MAX_CANON_SIZE, "canonical forms are limited to {MAX_CANON_SIZE} elements");
    (0..n).permutations(n)
}

/// Order matrix under `perm` (old `x` becomes `perm[x]`), row-major bits.
fn poset_code(p: &Poset, perm: &[usize]) -> u64 {
    let n = p.len();
    let mut code = 0u64;
    for x in 0..n {
        for y in p.up(x).iter() {
            code |= 1 << (perm[x] * n + perm[y]);
        }
    }
    code
}

/// `(key, perm)` with `perm` the relabeling that attains the minimal key.
pub fn canonical_poset(p: &Poset) -> (u64, Vec<usize>) {
    perms(p.len())
        .map(|perm| (poset_code(p, &perm), perm))
        .min()
        .expect("at least one permutation")
}

fn algebra_code(alg: &FiniteAlgebra, perm: &[usize]) -> Vec<u8> {
    let n = alg.len();
    let mut inv = vec![0; n];
    for (x, &px) in perm.iter().enumerate() {
        inv[px] = x;
    }
    let mut code = Vec::with_capacity(4 * n * n + 1);
    for i in 0..n {
        for j in 0..n {
            code.push(alg.leq(inv[i], inv[j]) as u8);
        }
    }
    let mut table = |f: &dyn Fn(Elem, Elem) -> Elem| {
        for i in 0..n {
            for j in 0..n {
                code.push(perm[f(inv[i], inv[j])] as u8);
            }
        }
    };
    table(&|x, y| alg.to(x, y));
    table(&|x, y| alg.lto(x, y));
    if alg.has_mul() {
        table(&|x, y| alg.mul(x, y));
    }
    code.push(alg.has_mul() as u8);
    code
}

/// Isomorphism-invariant key and the permutation attaining it.
pub fn canonical_key(alg: &FiniteAlgebra) -> (Vec<u8>, Vec<usize>) {
    perms(alg.len())
        .map(|perm| (algebra_code(alg, &perm), perm))
        .min()
        .expect("at least one permutation")
}

/// The canonical relabeling of `alg`; labels travel with their elements.
pub fn canonical_form(alg: &FiniteAlgebra) -> FiniteAlgebra {
    let (_, perm) = canonical_key(alg);
    alg.permuted(&perm)
}

pub fn isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    a.len() == b.len() && canonical_key(a).0 == canonical_key(b).0
}
