//! Runs every applicable law suite over a list of algebras.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::bitset::Set;
use crate::classes::{check_two_sided, classify};
use crate::error::{Error, Result};
use crate::filters::{generated_filter, generated_filter_product, is_filter, is_filter_by_product, mu_law_suite};
use crate::hoops::hoop_suite;
use crate::primes::{mtl_iff_theorem, prime_class_inclusions, prime_theorem_suite};
use crate::quantale::Quantale;
use crate::report::{ClassReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    /// Preconditions of the suite do not hold for this algebra.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub suite: String,
    pub status: Status,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub name: String,
    pub size: usize,
    pub classes: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    /// `(suite, algebra name)` for every failing suite.
    pub fn failures(&self) -> Vec<(&str, &str)> {
        self.entries
            .iter()
            .flat_map(|e| {
                e.verdicts
                    .iter()
                    .filter(|v| v.status == Status::Fails)
                    .map(move |v| (v.suite.as_str(), e.name.as_str()))
            })
            .collect()
    }

    /// Number of algebras on which `suite` ran (did not skip).
    pub fn ran(&self, suite: &str) -> usize {
        self.entries
            .iter()
            .filter(|e| e.verdicts.iter().any(|v| v.suite == suite && v.status != Status::Skipped))
            .count()
    }
}

/// Every way of computing the same object twice, compared:
/// `oracle.filter` (rule form vs `F·F ⊆ F`), `oracle.generated` (fixpoint vs
/// products), `oracle.umul`, `oracle.ures_l`, `oracle.ures_r` (implication
/// form vs product-table form).
pub fn oracle_suite(alg: &FiniteAlgebra, cap: usize) -> Result<ClassReport> {
    let q = Quantale::new(alg, cap);
    let sets = q.enumerate()?;
    let mut rep = ClassReport::new("oracles");
    for b in 0..1u64 << alg.len().min(12) {
        let s = Set::from_bits(b);
        if !s.is_subset(alg.full()) {
            continue;
        }
        rep.check(is_filter(alg, s) == is_filter_by_product(alg, s), "oracle.filter", [s]);
        if alg.has_mul() && !s.is_empty() {
            let a = generated_filter(alg, s)?;
            let b = generated_filter_product(alg, s)?;
            rep.check(a == b, "oracle.generated", [s]);
        }
    }
    if alg.has_mul() {
        for &x in &sets {
            for &y in &sets {
                let w = [x.set(), y.set()];
                rep.check(q.umul(x, y) == q.umul_product(x, y)?, "oracle.umul", w);
                rep.check(q.ures_l(x, y) == q.ures_l_product(x, y)?, "oracle.ures_l", w);
                rep.check(q.ures_r(x, y) == q.ures_r_product(x, y)?, "oracle.ures_r", w);
            }
        }
    }
    Ok(rep)
}

fn verdict(suite: &str, r: Result<ClassReport>) -> Result<Verdict> {
    let (status, violations) = match r {
        Ok(rep) if rep.holds() => (Status::Holds, Vec::new()),
        Ok(rep) => (Status::Fails, rep.violations().to_vec()),
        Err(
            Error::PreconditionViolated(_)
            | Error::NotAHoop
            | Error::MissingTable(_)
            | Error::JoinMissing(..)
            | Error::NotUnital,
        ) => (Status::Skipped, Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(Verdict { suite: suite.to_string(), status, violations })
}

/// Suite names in report order.
pub const SUITES: &[&str] = &[
    "quantale_laws",
    "supercompact",
    "oracles",
    "mu_laws",
    "hoop_suite",
    "prime_inclusions",
    "prime_theorem",
    "mtl_iff",
];

fn entry(alg: &FiniteAlgebra, cap: usize) -> Result<SweepEntry> {
    let q = Quantale::new(alg, cap);
    let two_sided_join = alg.has_mul()
        && check_two_sided(alg).unwrap_or(false)
        && alg.join_table().is_ok();
    let verdicts = vec![
        verdict("quantale_laws", q.check_laws())?,
        verdict("supercompact", q.supercompact_characterization())?,
        verdict("oracles", oracle_suite(alg, cap))?,
        verdict("mu_laws", mu_law_suite(alg, cap))?,
        verdict("hoop_suite", hoop_suite(alg))?,
        verdict("prime_inclusions", prime_class_inclusions(alg, cap))?,
        verdict(
            "prime_theorem",
            if two_sided_join {
                prime_theorem_suite(alg, cap)
            } else {
                Err(Error::PreconditionViolated("not a 2-sided residuated ∨-semilattice".into()))
            },
        )?,
        verdict("mtl_iff", mtl_iff_theorem(alg, cap))?,
    ];
    Ok(SweepEntry {
        name: alg.name().to_string(),
        size: alg.len(),
        classes: classify(alg).names().into_iter().map(String::from).collect(),
        verdicts,
    })
}

/// One entry per algebra, in input order; the work runs in parallel but
/// the report is independent of scheduling.
pub fn run_sweep(algs: &[FiniteAlgebra], cap: usize) -> Result<SweepReport> {
    let entries = algs.par_iter().map(|a| entry(a, cap)).collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quantale::DEFAULT_CAP;

    #[test]
    fn catalog_sweep_is_clean() {
        let algs: Vec<_> = ["trivial", "godel:3", "lukasiewicz:3", "heyting-d5", "cyclic:2"]
            .iter()
            .map(|n| catalog(n).unwrap())
            .collect();
        let rep = run_sweep(&algs, DEFAULT_CAP).unwrap();
        assert!(rep.failures().is_empty(), "{:?}", rep.failures());
        assert_eq!(rep.ran("hoop_suite"), 4);
        assert_eq!(rep.ran("mu_laws"), 4);
        assert_eq!(rep.ran("quantale_laws"), 5);
    }
}
