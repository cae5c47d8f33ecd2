//! Check reports with stable item names and deterministic rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Evidence attached to a failing item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based frame indices (or trial numbers) locating the failure.
    pub indices: Vec<usize>,
    /// Residual polynomials in the text grammar.
    pub residual: Vec<String>,
    /// Inputs that reproduce the failure, e.g. random sections.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<Vec<String>>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, residual: Vec<String>) -> Self {
        Witness { indices, residual, inputs: Vec::new() }
    }

    pub fn with_inputs(mut self, inputs: Vec<Vec<String>>) -> Self {
        self.inputs = inputs;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub check: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckItem {
    pub fn pass(check: &str) -> Self {
        CheckItem { check: check.to_string(), verdict: Verdict::Pass, witness: None }
    }

    pub fn fail(check: &str, witness: Witness) -> Self {
        CheckItem { check: check.to_string(), verdict: Verdict::Fail, witness: Some(witness) }
    }

    /// `Pass` when `witness` is `None`.
    pub fn from_witness(check: &str, witness: Option<Witness>) -> Self {
        match witness {
            None => CheckItem::pass(check),
            Some(w) => CheckItem::fail(check, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub overall: Verdict,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>, items: Vec<CheckItem>) -> Self {
        let overall = if items.iter().all(CheckItem::passed) { Verdict::Pass } else { Verdict::Fail };
        CheckReport { subject: subject.into(), overall, items }
    }

    pub fn passed(&self) -> bool {
        self.overall.is_pass()
    }

    pub fn item(&self, check: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        let width = self.items.iter().map(|i| i.check.len()).max().unwrap_or(0);
        for item in &self.items {
            write!(f, "  {:<width$}  {}", item.check, item.verdict)?;
            if let Some(w) = &item.witness {
                let idx: Vec<String> = w.indices.iter().map(usize::to_string).collect();
                write!(f, "  at ({}): [{}]", idx.join(","), w.residual.join(", "))?;
                for input in &w.inputs {
                    write!(f, "\n  {:<width$}    input [{}]", "", input.join(", "))?;
                }
            }
            writeln!(f)?;
        }
        writeln!(f, "overall: {}", self.overall)
    }
}
