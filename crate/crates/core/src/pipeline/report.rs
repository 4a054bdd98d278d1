use super::schema::FileKind;
use crate::doublecover::ResolutionStep;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

/// Version string of the JSON report.
pub const REPORT_SCHEMA: &str = "fibra-report/1";

pub const ASSERTED: &str = "asserted, not verified";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageResult {
    pub stage: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// One row of the singular-point table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRow {
    pub label: String,
    pub point: String,
    pub orbit_size: usize,
    pub mult: u32,
    #[serde(rename = "type")]
    pub sing_type: String,
    pub tangent_directions: u32,
    pub components: BTreeMap<String, u32>,
    pub resolution: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub key: String,
    pub expected: Value,
    pub computed: Option<Value>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub claim: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub schema: String,
    pub id: String,
    pub example: String,
    pub kind: FileKind,
    pub stages: Vec<StageResult>,
    pub singular_table: Vec<PointRow>,
    pub resolution_log: Vec<ResolutionStep>,
    pub computed: BTreeMap<String, Value>,
    pub comparisons: Vec<Comparison>,
    pub assertions: Vec<Assertion>,
    /// Computed keys that go beyond what the construction itself states.
    pub extensions: Vec<String>,
    pub first_failure: Option<String>,
    pub passed: bool,
}

impl ConstructionReport {
    pub fn stage(&self, name: &str) -> Option<&StageResult> {
        self.stages.iter().find(|s| s.stage == name)
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.computed.get(key)
    }

    /// `p_g(F)` for surface fibrations, `g(F)` for curve fibrations.
    pub fn headline(&self) -> Option<(String, i64)> {
        for k in ["pg_F", "g_F"] {
            if let Some(v) = self.computed.get(k).and_then(Value::as_i64) {
                return Some((k.to_string(), v));
            }
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<ConstructionReport, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Short human-readable rendering.
    pub fn render(&self) -> String {
        let mut out = format!("{} ({}, example {})\n", self.id, kind_name(self.kind), self.example);
        for s in &self.stages {
            let st = match s.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            match &s.diagnostic {
                Some(d) => out += &format!("  {:<18} {st}: {d}\n", s.stage),
                None => out += &format!("  {:<18} {st}\n", s.stage),
            }
        }
        if !self.singular_table.is_empty() {
            out += "  points:\n";
            for r in &self.singular_table {
                let comps: Vec<String> = r.components.iter().map(|(c, m)| format!("{c}:{m}")).collect();
                out += &format!(
                    "    {:<4} {:<24} m={} {:<20} [{}] k={:?}\n",
                    r.label,
                    r.point,
                    r.mult,
                    r.sing_type,
                    comps.join(" "),
                    r.resolution
                );
            }
        }
        for c in self.comparisons.iter().filter(|c| !c.ok) {
            if let Some(got) = &c.computed {
                out += &format!("  mismatch {}: expected {}, computed {got}\n", c.key, c.expected);
            }
        }
        let missing = self.comparisons.iter().filter(|c| c.computed.is_none()).count();
        if missing > 0 {
            out += &format!("  {missing} expected value(s) not computed\n");
        }
        for a in &self.assertions {
            out += &format!("  {} ({})\n", a.claim, a.status);
        }
        out += &format!("  result: {}\n", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

pub fn kind_name(k: FileKind) -> &'static str {
    match k {
        FileKind::Standard => "standard",
        FileKind::Variant => "variant",
        FileKind::Literature => "literature",
    }
}
