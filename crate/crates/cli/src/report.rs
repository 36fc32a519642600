//! Report payloads shared by every subcommand: structured values for the
//! JSON mode plus a pre-rendered human text body, and the pass/fail checks
//! that drive the process exit status.

use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Human rendering printed verbatim in text mode.
    pub text: String,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_string(&self) -> String {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect();
        serde_json::to_string_pretty(&json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": checks,
        }))
        .expect("report values are always serializable")
    }
}

/// One "check <name>: pass|FAIL (<detail>)" line.
pub fn check_line(c: &Check) -> String {
    format!(
        "check {}: {}{}",
        c.name,
        if c.pass { "pass" } else { "FAIL" },
        if c.detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", c.detail)
        }
    )
}
