//! Verdicts with counterexample witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::bitset::Set;

/// One coordinate of a counterexample: a carrier element or a set of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Elem(usize),
    Set(Set),
}

impl Witness {
    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        match *self {
            Witness::Elem(x) => alg.label(x).to_string(),
            Witness::Set(s) => alg.render_set(s),
        }
    }
}

impl From<usize> for Witness {
    fn from(x: usize) -> Self {
        Witness::Elem(x)
    }
}

impl From<Set> for Witness {
    fn from(s: Set) -> Self {
        Witness::Set(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<Witness>,
}

/// Verdict for one structure class or law suite.
///
/// Only the first (lexicographically smallest, under the scan order)
/// witness of each law is kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    class_name: String,
    holds: bool,
    violations: Vec<Violation>,
}

impl ClassReport {
    pub fn new(class_name: impl Into<String>) -> Self {
        ClassReport { class_name: class_name.into(), holds: true, violations: Vec::new() }
    }

    pub fn class_name(&self) -> &str {
        &self.class_name
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    pub fn is_violated(&self, law: &str) -> bool {
        self.violation(law).is_some()
    }

    /// Records a failure of `law`; later witnesses of an already violated law are dropped.
    pub fn record<W: Into<Witness>>(&mut self, law: &str, witness: impl IntoIterator<Item = W>) {
        if self.is_violated(law) {
            return;
        }
        self.holds = false;
        self.violations.push(Violation {
            law: law.to_string(),
            witness: witness.into_iter().map(Into::into).collect(),
        });
    }

    /// Records `witness` under `law` unless `ok`.
    pub fn check<W: Into<Witness>>(
        &mut self,
        ok: bool,
        law: &str,
        witness: impl IntoIterator<Item = W>,
    ) {
        if !ok {
            self.record(law, witness);
        }
    }

    /// Folds another report's violations into this one.
    pub fn absorb(&mut self, other: ClassReport) {
        for v in other.violations {
            if !self.is_violated(&v.law) {
                self.holds = false;
                self.violations.push(v);
            }
        }
    }

    /// Human-readable rendering using the algebra's labels.
    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        let mut out = format!(
            "{}: {}",
            self.class_name,
            if self.holds { "holds" } else { "FAILS" }
        );
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(|w| w.render(alg)).collect();
            out.push_str(&format!("\n  {} at ({})", v.law, w.join(", ")));
        }
        out
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.class_name, if self.holds { "holds" } else { "FAILS" })?;
        for v in &self.violations {
            write!(f, " [{} {:?}]", v.law, v.witness)?;
        }
        Ok(())
    }
}

// Lexicographic tuple scans; each stops a law at its first failure.

pub(crate) fn scan1(rep: &mut ClassReport, n: usize, law: &str, f: impl Fn(usize) -> bool) {
    if let Some(x) = (0..n).find(|&x| !f(x)) {
        rep.record(law, [x]);
    }
}

pub(crate) fn scan2(rep: &mut ClassReport, n: usize, law: &str, f: impl Fn(usize, usize) -> bool) {
    for x in 0..n {
        for y in 0..n {
            if !f(x, y) {
                rep.record(law, [x, y]);
                return;
            }
        }
    }
}

pub(crate) fn scan3(
    rep: &mut ClassReport,
    n: usize,
    law: &str,
    f: impl Fn(usize, usize, usize) -> bool,
) {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !f(x, y, z) {
                    rep.record(law, [x, y, z]);
                    return;
                }
            }
        }
    }
}
