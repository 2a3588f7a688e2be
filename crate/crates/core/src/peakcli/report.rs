//! Machine-readable results of a verification run.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Section {
    #[serde(rename = "tables")]
    Tables,
    #[serde(rename = "typeA")]
    TypeA,
    #[serde(rename = "typeB")]
    TypeB,
    #[serde(rename = "peak")]
    Peak,
    #[serde(rename = "bridge")]
    Bridge,
    #[serde(rename = "ano")]
    Ano,
    #[serde(rename = "conjecture")]
    Conjecture,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::Tables,
        Section::TypeA,
        Section::TypeB,
        Section::Peak,
        Section::Bridge,
        Section::Ano,
        Section::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Tables => "tables",
            Section::TypeA => "typeA",
            Section::TypeB => "typeB",
            Section::Peak => "peak",
            Section::Bridge => "bridge",
            Section::Ano => "ano",
            Section::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .iter()
            .copied()
            .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let names: Vec<&str> = Section::ALL.iter().map(|x| x.name()).collect();
                format!("unknown section {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub section: Section,
    /// Acceptance criterion this check belongs to, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub criterion: Option<u8>,
    /// Whether a failure makes the run fail.
    pub hard: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(section: Section, id: impl Into<String>, criterion: Option<u8>, passed: bool) -> Self {
        Check {
            id: id.into(),
            section,
            criterion,
            hard: true,
            passed,
            detail: None,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn soft(mut self) -> Self {
        self.hard = false;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub hard_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, parameters: BTreeMap<String, String>, checks: Vec<Check>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        let summary = Summary {
            total: checks.len(),
            passed: checks.len() - failed,
            failed,
            hard_failed: checks.iter().filter(|c| !c.passed && c.hard).count(),
        };
        RunReport {
            command: command.to_string(),
            parameters,
            checks,
            summary,
            wall_time_ms: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.hard_failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON text with the wall time zeroed, for comparing runs.
    pub fn stable_json(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = 0;
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = match (c.passed, c.hard) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "WARN",
            };
            s.push_str(&format!("{mark} {}/{}", c.section, c.id));
            if let Some(d) = &c.detail {
                s.push_str(&format!(": {d}"));
            }
            s.push('\n');
        }
        let m = &self.summary;
        s.push_str(&format!(
            "{} checks, {} passed, {} failed ({} hard), {} ms\n",
            m.total, m.passed, m.failed, m.hard_failed, self.wall_time_ms
        ));
        s
    }
}
