//! Exhaustive generation of small algebras by target class.
//!
//! Only the `→` table is searched. In any quantum B-algebra `⇝` is
//! determined by `x⇝z = max{y | x ≤ y→z}`, and in a residuated one the
//! product by `x·y = min{z | x ≤ y→z}`; a table whose derived operations do
//! not exist is discarded. Every candidate is then run through the full
//! class check, which alone decides membership. Pruning (monotonicity of
//! `→`, integral constraints) only shrinks the candidate stream.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParts, Elem, FiniteAlgebra};
use crate::bitset::Set;
use crate::classes::{check_pseudo_hoop, check_quantum_b, check_residuated, classify, ClassSummary};
use crate::error::{Error, Result};
use crate::forge::canon::canonical_key;
use crate::forge::posets::enumerate_posets;
use crate::forge::predicate::Predicate;
use crate::order::Poset;
use crate::quantale::DEFAULT_CAP;

/// No search goes beyond this carrier size.
pub const MAX_SEARCH_SIZE: usize = 7;

/// Default bound on the number of algebras one search may produce.
pub const DEFAULT_EMIT_CAP: usize = 1 << 20;

/// Largest size for [`enumerate_unpruned`].
pub const UNPRUNED_MAX_SIZE: usize = 3;

/// Largest size for [`enumerate_independent`].
pub const INDEPENDENT_MAX_SIZE: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetClass {
    QuantumB,
    IntegralQb,
    Residuated,
    IntegralResiduated,
    /// Integral residuated ∨-semilattice (integral implies 2-sided).
    ResiduatedJoin,
    PseudoHoop,
}

impl TargetClass {
    pub const ALL: [TargetClass; 6] = [
        TargetClass::QuantumB,
        TargetClass::IntegralQb,
        TargetClass::Residuated,
        TargetClass::IntegralResiduated,
        TargetClass::ResiduatedJoin,
        TargetClass::PseudoHoop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TargetClass::QuantumB => "quantum-b",
            TargetClass::IntegralQb => "integral-qb",
            TargetClass::Residuated => "residuated",
            TargetClass::IntegralResiduated => "integral-residuated",
            TargetClass::ResiduatedJoin => "residuated-join",
            TargetClass::PseudoHoop => "pseudo-hoop",
        }
    }

    /// Default size cap; classes without integral pruning search `n^(n²)` tables.
    pub fn default_size_cap(self) -> usize {
        match self {
            TargetClass::QuantumB | TargetClass::Residuated => 3,
            _ => 5,
        }
    }

    fn integral(self) -> bool {
        !matches!(self, TargetClass::QuantumB | TargetClass::Residuated)
    }

    fn residuated(self) -> bool {
        !matches!(self, TargetClass::QuantumB | TargetClass::IntegralQb)
    }

    /// The full membership check.
    pub fn admits(self, alg: &FiniteAlgebra) -> bool {
        if !check_quantum_b(alg).holds() || (self.integral() && !alg.is_integral()) {
            return false;
        }
        if !self.residuated() {
            return true;
        }
        if !alg.has_mul() || !check_residuated(alg).map(|r| r.holds()).unwrap_or(false) {
            return false;
        }
        match self {
            TargetClass::ResiduatedJoin => alg.join_table().is_ok(),
            TargetClass::PseudoHoop => check_pseudo_hoop(alg).map(|r| r.holds()).unwrap_or(false),
            _ => true,
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TargetClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub min_size: usize,
    pub max_size: usize,
    pub target: TargetClass,
    /// Expression in the [`Predicate`] language; `None` accepts everything.
    pub predicate: Option<String>,
    /// Maximum number of findings returned by [`find_counterexamples`].
    pub limit: Option<usize>,
    /// Keep one canonical representative per isomorphism class.
    pub dedup: bool,
    /// Overrides [`TargetClass::default_size_cap`], up to [`MAX_SEARCH_SIZE`].
    pub size_cap: Option<usize>,
    pub emit_cap: usize,
}

impl SearchSpec {
    /// Sizes `1..=max_size`, deduplicated, no predicate.
    pub fn new(target: TargetClass, max_size: usize) -> Self {
        SearchSpec {
            min_size: 1,
            max_size,
            target,
            predicate: None,
            limit: None,
            dedup: true,
            size_cap: None,
            emit_cap: DEFAULT_EMIT_CAP,
        }
    }

    fn check(&self) -> Result<()> {
        let cap = self.size_cap.unwrap_or(self.target.default_size_cap()).min(MAX_SEARCH_SIZE);
        if self.max_size > cap {
            return Err(Error::CapExceeded { cap });
        }
        Ok(())
    }
}

fn derive_lto(p: &Poset, to: &[Elem]) -> Option<Vec<Elem>> {
    let n = p.len();
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for z in 0..n {
            let s: Set = (0..n).filter(|&y| p.leq(x, to[y * n + z])).collect();
            out.push(p.greatest_of(s)?);
        }
    }
    Some(out)
}

fn derive_mul(p: &Poset, to: &[Elem]) -> Option<Vec<Elem>> {
    let n = p.len();
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let s: Set = (0..n).filter(|&z| p.leq(x, to[y * n + z])).collect();
            out.push(p.least_of(s)?);
        }
    }
    Some(out)
}

/// Builds the algebra determined by `to` on `p`, if it lies in `target`.
fn assemble(p: &Poset, to: &[Elem], target: TargetClass) -> Option<FiniteAlgebra> {
    let lto = derive_lto(p, to)?;
    let mul = derive_mul(p, to);
    if target.residuated() && mul.is_none() {
        return None;
    }
    let parts = |mul: Option<Vec<Elem>>| AlgebraParts {
        name: String::new(),
        labels: (0..p.len()).map(|i| i.to_string()).collect(),
        poset: p.clone(),
        to: to.to_vec(),
        lto: lto.clone(),
        mul,
        unit: None,
        bottom: None,
    };
    let mut alg = FiniteAlgebra::new(parts(mul.clone())).ok()?;
    if !target.residuated() && mul.is_some() && !check_residuated(&alg).map(|r| r.holds()).unwrap_or(false) {
        alg = FiniteAlgebra::new(parts(None)).ok()?;
    }
    target.admits(&alg).then_some(alg)
}

/// All `→` tables on `p` satisfying the pruning constraints, in
/// lexicographic order.
fn pruned_tables(p: &Poset, integral: bool) -> Vec<Vec<Elem>> {
    let n = p.len();
    let top = p.top();
    if integral && top.is_none() {
        return Vec::new();
    }
    let domains: Vec<Vec<Elem>> = (0..n * n)
        .map(|c| {
            let (y, z) = (c / n, c % n);
            match top {
                Some(t) if integral => {
                    if p.leq(y, z) {
                        vec![t]
                    } else if y == t {
                        vec![z]
                    } else {
                        (0..n).filter(|&v| v != t && p.leq(z, v)).collect()
                    }
                }
                _ => (0..n).collect(),
            }
        })
        .collect();
    // For each cell, earlier cells bounding it from below / above:
    // y ≤ y' and z' ≤ z give y'→z' ≤ y→z.
    let below: Vec<Vec<usize>> = (0..n * n)
        .map(|c| {
            let (y, z) = (c / n, c % n);
            (0..c).filter(|&d| p.leq(y, d / n) && p.leq(d % n, z)).collect()
        })
        .collect();
    let above: Vec<Vec<usize>> = (0..n * n)
        .map(|c| {
            let (y, z) = (c / n, c % n);
            (0..c).filter(|&d| p.leq(d / n, y) && p.leq(z, d % n)).collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut to = vec![0; n * n];
    fn go(
        c: usize,
        p: &Poset,
        to: &mut Vec<Elem>,
        domains: &[Vec<Elem>],
        below: &[Vec<usize>],
        above: &[Vec<usize>],
        out: &mut Vec<Vec<Elem>>,
    ) {
        if c == to.len() {
            out.push(to.clone());
            return;
        }
        for &v in &domains[c] {
            if below[c].iter().all(|&d| p.leq(to[d], v)) && above[c].iter().all(|&d| p.leq(v, to[d])) {
                to[c] = v;
                go(c + 1, p, to, domains, below, above, out);
            }
        }
    }
    go(0, p, &mut to, &domains, &below, &above, &mut out);
    out
}

fn letter_labels(n: usize, unit: Option<Elem>, integral: bool) -> Vec<String> {
    let mut next = 0u8;
    (0..n)
        .map(|i| {
            if Some(i) == unit {
                if integral { "1".to_string() } else { "e".to_string() }
            } else {
                let l = (b'a' + next) as char;
                next += 1;
                l.to_string()
            }
        })
        .collect()
}

fn finish(alg: &FiniteAlgebra, name: String) -> FiniteAlgebra {
    let mut parts = alg.to_parts();
    parts.labels = letter_labels(alg.len(), alg.unit(), alg.is_integral());
    parts.name = name;
    FiniteAlgebra::new(parts).expect("relabeling keeps validity")
}

fn names(target: TargetClass, n: usize, algs: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    algs.iter().enumerate().map(|(k, a)| finish(a, format!("{target}-{n}-{k}"))).collect()
}

/// Every algebra of `spec.target` with size in `min_size..=max_size`,
/// ordered by size, then order, then table (or by canonical key when
/// deduplicating). Names are `<class>-<size>-<index>`.
pub fn enumerate_algebras(spec: &SearchSpec) -> Result<Vec<FiniteAlgebra>> {
    spec.check()?;
    let mut out = Vec::new();
    for n in spec.min_size.max(1)..=spec.max_size {
        let posets = enumerate_posets(n, false)?;
        let per_poset: Vec<Vec<FiniteAlgebra>> = posets
            .par_iter()
            .map(|p| {
                let mut found = Vec::new();
                for t in pruned_tables(p, spec.target.integral()) {
                    if let Some(a) = assemble(p, &t, spec.target) {
                        found.push(a);
                        if found.len() > spec.emit_cap {
                            break;
                        }
                    }
                }
                found
            })
            .collect();
        let mut total = out.len();
        for (i, v) in per_poset.iter().enumerate() {
            total += v.len();
            if total > spec.emit_cap {
                return Err(Error::SearchCapExceeded {
                    cap: spec.emit_cap,
                    emitted: total - v.len(),
                    orders_done: i,
                    orders_total: posets.len(),
                });
            }
        }
        let flat: Vec<FiniteAlgebra> = per_poset.into_iter().flatten().collect();
        let sized = if spec.dedup { dedup(flat) } else { flat };
        out.extend(names(spec.target, n, sized));
    }
    Ok(out)
}

/// One canonical representative per isomorphism class, sorted by key.
pub fn dedup(algs: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    let keyed: Vec<(Vec<u8>, FiniteAlgebra)> = algs
        .par_iter()
        .map(|a| {
            let (key, perm) = canonical_key(a);
            (key, a.permuted(&perm))
        })
        .collect();
    let mut unique = std::collections::BTreeMap::new();
    for (k, a) in keyed {
        unique.entry(k).or_insert(a);
    }
    unique.into_values().collect()
}

/// Oracle for [`enumerate_algebras`] without pruning: every `→` table on
/// every order of size `n`, same derivation, same class check.
pub fn enumerate_unpruned(target: TargetClass, n: usize) -> Result<Vec<FiniteAlgebra>> {
    if n > UNPRUNED_MAX_SIZE {
        return Err(Error::CapExceeded { cap: UNPRUNED_MAX_SIZE });
    }
    let posets = enumerate_posets(n, false)?;
    let found: Vec<Vec<FiniteAlgebra>> = posets
        .par_iter()
        .map(|p| {
            all_tables(n).filter_map(|t| assemble(p, &t, target)).collect()
        })
        .collect();
    Ok(names(target, n, found.into_iter().flatten().collect()))
}

/// Oracle with nothing derived: `→`, `⇝` and (for residuated targets) `·`
/// range over all tables independently. Quantum-B targets carry no product.
pub fn enumerate_independent(target: TargetClass, n: usize) -> Result<Vec<FiniteAlgebra>> {
    if n > INDEPENDENT_MAX_SIZE {
        return Err(Error::CapExceeded { cap: INDEPENDENT_MAX_SIZE });
    }
    let mut out = Vec::new();
    for p in enumerate_posets(n, false)? {
        for to in all_tables(n) {
            for lto in all_tables(n) {
                let muls: Vec<Option<Vec<Elem>>> = if target.residuated() {
                    all_tables(n).map(Some).collect()
                } else {
                    vec![None]
                };
                for mul in muls {
                    let parts = AlgebraParts {
                        name: String::new(),
                        labels: (0..n).map(|i| i.to_string()).collect(),
                        poset: p.clone(),
                        to: to.clone(),
                        lto: lto.clone(),
                        mul,
                        unit: None,
                        bottom: None,
                    };
                    if let Ok(a) = FiniteAlgebra::new(parts) {
                        if target.admits(&a) {
                            out.push(a);
                        }
                    }
                }
            }
        }
    }
    Ok(names(target, n, out))
}

/// All `n × n` tables over `{0..n-1}` in lexicographic order.
fn all_tables(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let cells = n * n;
    let count = (n as u64).pow(cells as u32);
    (0..count).map(move |mut k| {
        let mut t = vec![0; cells];
        for c in (0..cells).rev() {
            t[c] = (k % n as u64) as usize;
            k /= n as u64;
        }
        t
    })
}

/// An algebra satisfying a search predicate, with its class summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub algebra: FiniteAlgebra,
    pub summary: ClassSummary,
}

/// Algebras of the search space satisfying `spec.predicate`, at most
/// `spec.limit` of them, in enumeration order.
pub fn find_counterexamples(spec: &SearchSpec) -> Result<Vec<Finding>> {
    find_with_cap(spec, DEFAULT_CAP)
}

/// [`find_counterexamples`] with an explicit `U(A)` enumeration cap.
pub fn find_with_cap(spec: &SearchSpec, cap: usize) -> Result<Vec<Finding>> {
    let pred = Predicate::parse(spec.predicate.as_deref().unwrap_or("true"))?;
    let algs = enumerate_algebras(spec)?;
    let verdicts: Vec<Result<bool>> = algs.par_iter().map(|a| pred.eval(a, cap)).collect();
    let mut out = Vec::new();
    for (a, v) in algs.into_iter().zip(verdicts) {
        if spec.limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        if v? {
            out.push(Finding { summary: classify(&a), algebra: a });
        }
    }
    Ok(out)
}

/// The standard test bed: integral quantum B-algebras of size `1..=max_size`,
/// one per isomorphism class.
pub fn sweep(max_size: usize) -> Result<Vec<FiniteAlgebra>> {
    enumerate_algebras(&SearchSpec::new(TargetClass::IntegralQb, max_size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undeduped(target: TargetClass, n: usize) -> Vec<FiniteAlgebra> {
        let spec = SearchSpec { min_size: n, dedup: false, ..SearchSpec::new(target, n) };
        enumerate_algebras(&spec).unwrap()
    }

    fn shape(a: &FiniteAlgebra, with_mul: bool) -> (Vec<Vec<bool>>, Vec<Elem>, Vec<Elem>, Option<Vec<Elem>>) {
        let mul = if with_mul { a.mul_table().map(<[Elem]>::to_vec) } else { None };
        (a.poset().matrix(), a.to_table().to_vec(), a.lto_table().to_vec(), mul)
    }

    #[test]
    fn size_one_is_trivial() {
        for t in TargetClass::ALL {
            let v = undeduped(t, 1);
            assert_eq!(v.len(), 1, "{t}");
            assert_eq!(v[0].to_table(), [0]);
        }
    }

    #[test]
    fn two_chain_has_one_hoop_structure() {
        let v = enumerate_algebras(&SearchSpec { min_size: 2, ..SearchSpec::new(TargetClass::PseudoHoop, 2) })
            .unwrap();
        assert_eq!(v.len(), 1);
        assert!(crate::forge::canon::isomorphic(&v[0], &crate::catalog("chain:2").unwrap()));
        let v = enumerate_algebras(&SearchSpec { min_size: 2, ..SearchSpec::new(TargetClass::IntegralResiduated, 2) })
            .unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn pruned_matches_unpruned() {
        for t in TargetClass::ALL {
            for n in 1..=2 {
                let a: Vec<_> = undeduped(t, n).iter().map(|a| shape(a, true)).collect();
                let b: Vec<_> = enumerate_unpruned(t, n).unwrap().iter().map(|a| shape(a, true)).collect();
                assert_eq!(a, b, "{t} size {n}");
            }
        }
    }

    #[test]
    fn derivation_matches_independent_tables() {
        for t in TargetClass::ALL {
            for n in 1..=2 {
                let with_mul = t.residuated();
                let mut a: Vec<_> = undeduped(t, n).iter().map(|a| shape(a, with_mul)).collect();
                let mut b: Vec<_> =
                    enumerate_independent(t, n).unwrap().iter().map(|a| shape(a, with_mul)).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{t} size {n}");
            }
        }
    }

    #[test]
    fn caps() {
        assert_eq!(
            enumerate_algebras(&SearchSpec::new(TargetClass::QuantumB, 4)),
            Err(Error::CapExceeded { cap: 3 })
        );
        let spec = SearchSpec { emit_cap: 2, ..SearchSpec::new(TargetClass::IntegralQb, 3) };
        assert!(matches!(enumerate_algebras(&spec), Err(Error::SearchCapExceeded { cap: 2, .. })));
        assert!("nope".parse::<TargetClass>().is_err());
        assert_eq!("pseudo-hoop".parse::<TargetClass>().unwrap(), TargetClass::PseudoHoop);
    }

    #[test]
    fn emitted_algebras_pass_their_class() {
        for t in TargetClass::ALL {
            for a in enumerate_algebras(&SearchSpec::new(t, 3)).unwrap() {
                assert!(t.admits(&a), "{}", a.name());
            }
        }
    }
}
