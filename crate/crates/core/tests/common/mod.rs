//! Naive reference computations over raw bitmasks, written against the
//! tables only so that they share no code with the library routines they
//! check.

#![allow(dead_code)]

use qbforge::FiniteAlgebra;

pub fn members(n: usize, s: u64) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&i| s >> i & 1 == 1)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_up(a: &FiniteAlgebra, s: u64) -> bool {
    let n = a.len();
    members(n, s).all(|x| (0..n).all(|y| !a.leq(x, y) || s >> y & 1 == 1))
}

/// Every upper set, by scanning all `2^n` masks.
pub fn upper_sets(a: &FiniteAlgebra) -> Vec<u64> {
    (0..=full(a.len())).filter(|&s| is_up(a, s)).collect()
}

/// `X·Y` as the union of the principal products `↑x·↑y = {z | x ≤ y→z}`.
pub fn mul(a: &FiniteAlgebra, x: u64, y: u64) -> u64 {
    let n = a.len();
    let mut out = 0;
    for xx in members(n, x) {
        for yy in members(n, y) {
            for z in 0..n {
                if a.leq(xx, a.to(yy, z)) {
                    out |= 1 << z;
                }
            }
        }
    }
    out
}

/// Largest upper set `Y` with `X·Y ⊆ Z`, as a join over `U(A)`.
pub fn res_left(a: &FiniteAlgebra, us: &[u64], x: u64, z: u64) -> u64 {
    us.iter().filter(|&&y| mul(a, x, y) & !z == 0).fold(0, |acc, &y| acc | y)
}

/// Largest upper set `X` with `X·Y ⊆ Z`.
pub fn res_right(a: &FiniteAlgebra, us: &[u64], y: u64, z: u64) -> u64 {
    us.iter().filter(|&&x| mul(a, x, y) & !z == 0).fold(0, |acc, &x| acc | x)
}

/// Filter by the product definition: non-empty upper set with `F·F ⊆ F`.
pub fn is_filter(a: &FiniteAlgebra, s: u64) -> bool {
    s != 0 && is_up(a, s) && mul(a, s, s) & !s == 0
}

pub fn filters(a: &FiniteAlgebra) -> Vec<u64> {
    (1..=full(a.len())).filter(|&s| is_filter(a, s)).collect()
}

pub fn join(a: &FiniteAlgebra, x: usize, y: usize) -> Option<usize> {
    let n = a.len();
    let ub: Vec<usize> = (0..n).filter(|&z| a.leq(x, z) && a.leq(y, z)).collect();
    ub.iter().copied().find(|&m| ub.iter().all(|&z| a.leq(m, z)))
}

pub fn vee_prime(a: &FiniteAlgebra, f: u64) -> bool {
    let n = a.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let j = join(a, x, y).expect("joins exist");
            f >> j & 1 == 0 || f >> x & 1 == 1 || f >> y & 1 == 1
        })
    })
}

/// `(x→y)∨(y→x) = 1` for all pairs, using `imp` for the implication.
pub fn prelinear(a: &FiniteAlgebra, imp: impl Fn(usize, usize) -> usize) -> bool {
    let n = a.len();
    let one = a.unit().expect("unital");
    (0..n).all(|x| (0..n).all(|y| join(a, imp(x, y), imp(y, x)) == Some(one)))
}

pub fn to_prime(a: &FiniteAlgebra, f: u64, imp: impl Fn(usize, usize) -> usize) -> bool {
    let n = a.len();
    (0..n).all(|x| (0..n).all(|y| f >> imp(x, y) & 1 == 1 || f >> imp(y, x) & 1 == 1))
}
