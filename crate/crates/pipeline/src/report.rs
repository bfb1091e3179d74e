//! Machine-readable reports. Field order and map ordering are fixed, so the
//! same inputs give byte-identical JSON.

use lode_catalog::{Check, Status};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

pub const REPORT_SCHEMA: &str = "lode-atlas/report/v1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Section {
        Section { name: name.into(), checks: Vec::new(), data: BTreeMap::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn put(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.to_string(), serde_json::to_value(v).expect("serializable report data"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub passed: bool,
    pub sections: Vec<Section>,
}

/// Longest data value printed inline by `to_text`.
const DATA_WIDTH: usize = 160;

impl Report {
    pub fn new(command: impl Into<String>, sections: Vec<Section>) -> Report {
        let passed = sections.iter().all(Section::passed);
        Report { schema: REPORT_SCHEMA, command: command.into(), passed, sections }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    /// One line per check, `STATUS section/check: witness (note)`, after
    /// `section/key = value` lines for the shorter data entries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            for (k, v) in &s.data {
                let text = match v {
                    Value::String(x) => x.clone(),
                    _ => v.to_string(),
                };
                if text.len() <= DATA_WIDTH {
                    out.push_str(&format!("{}/{k} = {text}\n", s.name));
                } else {
                    out.push_str(&format!("{}/{k} = ... ({} chars, see --json)\n", s.name, text.len()));
                }
            }
            for c in &s.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                    Status::Info => "INFO",
                };
                out.push_str(&format!("{tag} {}/{}", s.name, c.name));
                if let Some(w) = &c.witness {
                    out.push_str(&format!(": {w}"));
                }
                if let Some(n) = &c.note {
                    out.push_str(&format!(" ({n})"));
                }
                out.push('\n');
            }
        }
        out.push_str(if self.passed { "all checks passed\n" } else { "some checks failed\n" });
        out
    }
}
