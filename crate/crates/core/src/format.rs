//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "godel:2",
//!   "elements": ["0", "1"],
//!   "leq": [["0", "1"]],
//!   "to": [["1", "1"], ["0", "1"]],
//!   "lto": [["1", "1"], ["0", "1"]],
//!   "mul": [["0", "0"], ["0", "1"]],
//!   "class": ["pseudo_hoop"]
//! }
//! ```
//!
//! `leq` is either a list of `[lower, upper]` label pairs, closed
//! reflexively and transitively on ingest, or a full boolean matrix.
//! `mul`, `unit`, `bottom` and `class` are optional. Output always uses the
//! full matrix and a fixed field order, one table row per line, so emitting
//! a parsed file reproduces it byte for byte.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParts, Elem, FiniteAlgebra};
use crate::classes::classify;
use crate::error::{Error, Result};
use crate::order::{validate_poset, Poset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LeqSpec {
    Pairs(Vec<[String; 2]>),
    Matrix(Vec<Vec<bool>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub elements: Vec<String>,
    pub leq: LeqSpec,
    pub to: Vec<Vec<String>>,
    pub lto: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    /// Class names (as in [`crate::classes::ClassSummary::names`]) that must hold.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub class: Vec<String>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &FiniteAlgebra) -> Self {
        let n = alg.len();
        let labels = |t: &[Elem]| -> Vec<Vec<String>> {
            t.chunks(n).map(|row| row.iter().map(|&e| alg.label(e).to_string()).collect()).collect()
        };
        AlgebraFile {
            name: alg.name().to_string(),
            elements: alg.labels().to_vec(),
            leq: LeqSpec::Matrix(alg.poset().matrix()),
            to: labels(alg.to_table()),
            lto: labels(alg.lto_table()),
            mul: alg.mul_table().map(labels),
            unit: alg.unit().map(|u| alg.label(u).to_string()),
            bottom: alg.bottom().map(|b| alg.label(b).to_string()),
            class: Vec::new(),
        }
    }

    /// Resolves labels, closes the order, validates, and checks declared classes.
    pub fn into_algebra(self) -> Result<FiniteAlgebra> {
        let n = self.elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in self.elements.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let resolve = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));

        let poset = match &self.leq {
            LeqSpec::Pairs(pairs) => {
                let pairs = pairs
                    .iter()
                    .map(|[a, b]| Ok((resolve(a)?, resolve(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                Poset::from_pairs(n, &pairs)?
            }
            LeqSpec::Matrix(m) => {
                if m.len() != n {
                    return Err(Error::TableShape { table: "leq", len: m.len(), expected: n });
                }
                validate_poset(m)?
            }
        };
        let table = |name: &'static str, rows: &[Vec<String>]| -> Result<Vec<Elem>> {
            if rows.len() != n {
                return Err(Error::TableShape { table: name, len: rows.len(), expected: n });
            }
            let mut out = Vec::with_capacity(n * n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::TableShape { table: name, len: row.len(), expected: n });
                }
                for l in row {
                    out.push(resolve(l)?);
                }
            }
            Ok(out)
        };
        let parts = AlgebraParts {
            name: self.name.clone(),
            labels: self.elements.clone(),
            poset,
            to: table("to", &self.to)?,
            lto: table("lto", &self.lto)?,
            mul: self.mul.as_deref().map(|m| table("mul", m)).transpose()?,
            unit: self.unit.as_deref().map(resolve).transpose()?,
            bottom: self.bottom.as_deref().map(resolve).transpose()?,
        };
        let alg = FiniteAlgebra::new(parts)?;
        if !self.class.is_empty() {
            let holds = classify(&alg).names();
            for c in &self.class {
                if !holds.contains(&c.as_str()) {
                    return Err(Error::ValidationFailed {
                        name: self.name.clone(),
                        reason: format!("declared class `{c}` does not hold"),
                    });
                }
            }
        }
        Ok(alg)
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.into_algebra()
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn write_rows<T>(out: &mut String, key: &str, rows: &[Vec<T>], cell: impl Fn(&T) -> String) {
    let _ = writeln!(out, "  {}: [", quoted(key));
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(&cell).collect();
        let sep = if i + 1 < rows.len() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
    }
    out.push_str("  ]");
}

/// Canonical text of an algebra file, ending in a newline.
pub fn emit(file: &AlgebraFile) -> String {
    let mut fields: Vec<String> = Vec::new();
    fields.push(format!("  \"name\": {}", quoted(&file.name)));
    let elems: Vec<String> = file.elements.iter().map(|l| quoted(l)).collect();
    fields.push(format!("  \"elements\": [{}]", elems.join(", ")));
    let mut s = String::new();
    match &file.leq {
        LeqSpec::Matrix(m) => write_rows(&mut s, "leq", m, |b| b.to_string()),
        LeqSpec::Pairs(p) => {
            let rows: Vec<Vec<String>> = p.iter().map(|pair| pair.to_vec()).collect();
            write_rows(&mut s, "leq", &rows, |l| quoted(l))
        }
    }
    fields.push(std::mem::take(&mut s));
    write_rows(&mut s, "to", &file.to, |l| quoted(l));
    fields.push(std::mem::take(&mut s));
    write_rows(&mut s, "lto", &file.lto, |l| quoted(l));
    fields.push(std::mem::take(&mut s));
    if let Some(m) = &file.mul {
        write_rows(&mut s, "mul", m, |l| quoted(l));
        fields.push(std::mem::take(&mut s));
    }
    if let Some(u) = &file.unit {
        fields.push(format!("  \"unit\": {}", quoted(u)));
    }
    if let Some(b) = &file.bottom {
        fields.push(format!("  \"bottom\": {}", quoted(b)));
    }
    if !file.class.is_empty() {
        let cs: Vec<String> = file.class.iter().map(|c| quoted(c)).collect();
        fields.push(format!("  \"class\": [{}]", cs.join(", ")));
    }
    format!("{{\n{}\n}}\n", fields.join(",\n"))
}

/// [`emit`] of [`AlgebraFile::from_algebra`].
pub fn to_text(alg: &FiniteAlgebra) -> String {
    emit(&AlgebraFile::from_algebra(alg))
}
