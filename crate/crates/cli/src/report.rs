//! Verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Wall time in milliseconds.
    pub timing_ms: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Check {
            name: name.into(),
            status,
            witnesses: Vec::new(),
            timing_ms: 0.0,
        }
    }

    pub fn witness(mut self, label: impl Into<String>, value: impl fmt::Display) -> Self {
        self.witnesses.push(Witness {
            label: label.into(),
            value: value.to_string(),
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub field: String,
    pub c: String,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, field: String, c: String, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let status = Status::from_bool(checks.iter().all(|c| c.status == Status::Pass));
        Report {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            field,
            c,
            checks,
            status,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cherednik {} {}", self.tool_version, self.command)?;
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "c: {}", self.c)?;
        for check in &self.checks {
            writeln!(
                f,
                "[{}] {} ({:.3} ms)",
                check.status, check.name, check.timing_ms
            )?;
            for w in &check.witnesses {
                writeln!(f, "    {} = {}", w.label, w.value)?;
            }
        }
        writeln!(f, "status: {}", self.status)
    }
}
