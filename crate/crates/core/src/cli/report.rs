//! Report envelope shared by every subcommand, with text, JSON and CSV sinks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub summary: String,
    #[serde(default)]
    pub detail: Value,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, status: Status, summary: impl Into<String>) -> Self {
        CheckResult { name: name.into(), status, summary: summary.into(), detail: Value::Null }
    }

    pub fn with_detail(mut self, detail: impl Serialize) -> Self {
        self.detail = serde_json::to_value(detail).expect("report detail serialises");
        self
    }
}

/// Known places where a reference statement and the computed objects differ,
/// or where an operational convention had to be chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Discrepancy {
    NonPrimeNine,
    GRange,
    EvenPrime,
    DegenerateWeights,
    IntegralForm,
    CosetDepth,
}

impl Discrepancy {
    pub fn id(self) -> &'static str {
        match self {
            Discrepancy::NonPrimeNine => "non-prime-nine",
            Discrepancy::GRange => "g-range",
            Discrepancy::EvenPrime => "even-prime",
            Discrepancy::DegenerateWeights => "degenerate-weights",
            Discrepancy::IntegralForm => "integral-form",
            Discrepancy::CosetDepth => "coset-depth",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            Discrepancy::NonPrimeNine => {
                "The reference bad-prime list for l=3 is {2, 3, 7, 9, 13, 17}; 9 is not prime. \
                 Only primes are classified, so the computed list is {2, 3, 7, 13, 17}."
            }
            Discrepancy::GRange => {
                "G_l taken on [1, 2l^2+l-3] is not the union of the blocks G_l(a): the union \
                 reaches 2l^2+2l-3 (at l=2, G_2(1) = [8,9] lies above 7). The identity holds \
                 exactly on [1, 2l^2+2l-3]; both ranges are reported."
            }
            Discrepancy::EvenPrime => {
                "p = 2 is classified bad by convention; reductions are only performed in odd \
                 characteristic."
            }
            Discrepancy::DegenerateWeights => {
                "Weights whose reduced denominator is divisible by p are listed as degenerate \
                 and excluded from the collision test."
            }
            Discrepancy::IntegralForm => {
                "Mod-p irreducibility is probed through ranks of the mod-p Gram form of the \
                 Verma module at the reduced (c, h); no integral form is constructed, so the \
                 probe is evidence at a truncation, not a proof."
            }
            Discrepancy::CosetDepth => {
                "Coset depths use the Sugawara weight n(n+2)/(4(k+2)); they check the grading \
                 bookkeeping of the branching rule over C, not its validity in characteristic p."
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Note {
    pub id: String,
    pub text: String,
}

impl From<Discrepancy> for Note {
    fn from(d: Discrepancy) -> Self {
        Note { id: d.id().to_string(), text: d.text().to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub tool_version: String,
    pub results: Vec<CheckResult>,
    pub notes: Vec<Note>,
}

impl ReportEnvelope {
    pub fn new(command: &str) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, result: CheckResult) {
        self.results.push(result);
    }

    pub fn note(&mut self, d: Discrepancy) {
        let note = Note::from(d);
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn failed(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }

    /// Pretty JSON with lexicographically ordered object keys.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("envelope serialises");
        let mut s = serde_json::to_string_pretty(&value).expect("value serialises");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_canonical_json())
    }

    pub fn write_csv(&self, path: &Path) -> csv::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["command", "check", "status", "summary"])?;
        for r in &self.results {
            w.write_record([self.command.as_str(), &r.name, r.status.as_str(), &r.summary])?;
        }
        for n in &self.notes {
            w.write_record([self.command.as_str(), &format!("note:{}", n.id), "info", &n.text])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Aligned status table followed by the notes.
    pub fn render_table(&self) -> String {
        let name_w = self.results.iter().map(|r| r.name.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<6}  {:<name_w$}  summary", "status", "check");
        let _ = writeln!(out, "{:-<6}  {:-<name_w$}  {:-<7}", "", "", "");
        for r in &self.results {
            let _ = writeln!(out, "{:<6}  {:<name_w$}  {}", r.status.as_str(), r.name, r.summary);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note [{}]: {}", n.id, n.text);
        }
        out
    }
}
