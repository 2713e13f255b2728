use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use qbforge::{ClassReport, FiniteAlgebra};

#[derive(Serialize)]
pub struct ViolationOut {
    pub law: String,
    pub witness: Vec<String>,
}

/// One asserted law or suite. The process exits 0 iff every verdict holds.
#[derive(Serialize)]
pub struct VerdictOut {
    pub name: String,
    pub holds: bool,
    pub violations: Vec<ViolationOut>,
}

impl VerdictOut {
    pub fn from_report(alg: &FiniteAlgebra, rep: &ClassReport) -> Self {
        VerdictOut {
            name: rep.class_name().to_string(),
            holds: rep.holds(),
            violations: rep
                .violations()
                .iter()
                .map(|v| ViolationOut {
                    law: v.law.clone(),
                    witness: v.witness.iter().map(|w| w.render(alg)).collect(),
                })
                .collect(),
        }
    }

    pub fn simple(name: impl Into<String>, holds: bool) -> Self {
        VerdictOut { name: name.into(), holds, violations: Vec::new() }
    }
}

/// Field order is part of the JSON schema.
#[derive(Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub data: Value,
    pub verdicts: Vec<VerdictOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, data: Value::Null, verdicts: Vec::new(), timing_ms: None, lines: Vec::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn verdict(&mut self, v: VerdictOut) {
        self.verdicts.push(v);
    }

    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "{}: {}", v.name, if v.holds { "holds" } else { "FAILS" });
            for w in &v.violations {
                let _ = writeln!(out, "  {} at ({})", w.law, w.witness.join(", "));
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms:.1} ms");
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
