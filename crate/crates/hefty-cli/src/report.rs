//! Machine-readable run reports.
//!
//! One JSON document per run: the command, a digest of the input, the
//! parameters, the results, and a list of theorem-check verdicts. Fields
//! serialize in declaration order and maps are sorted, so reports are
//! byte-identical across runs for fixed inputs.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// Informational checks never affect the exit code.
    pub informational: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input_digest: Option<String>,
    pub parameters: BTreeMap<String, String>,
    pub results: serde_json::Value,
    pub checks: Vec<Check>,
    pub verdict: String,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input_digest: None,
            parameters: BTreeMap::new(),
            results: serde_json::Value::Null,
            checks: Vec::new(),
            verdict: "PASS".to_string(),
        }
    }

    pub fn digest_input(&mut self, raw: &str) {
        let mut hasher = Sha256::new();
        hasher.update(raw.as_bytes());
        let bytes = hasher.finalize();
        let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
        self.input_digest = Some(format!("sha256:{hex}"));
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString, pass: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            informational: false,
        });
    }

    pub fn info_check(
        &mut self,
        name: &str,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            informational: true,
        });
    }

    /// Exit code 0 when every binding check passed, 1 otherwise.
    pub fn finish(&mut self) -> i32 {
        let failed = self.checks.iter().any(|c| !c.informational && !c.pass);
        self.verdict = if failed { "FAIL" } else { "PASS" }.to_string();
        i32::from(failed)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Serialize a hefty simplex as plain index lists.
pub fn simplex_json(s: &hefty_core::HeftySimplex) -> serde_json::Value {
    serde_json::json!({
        "vertices": s.vertices,
        "heft": s.heft(),
        "enclosed": s.enclosed,
    })
}

pub fn point_json(p: &hefty_core::Point) -> serde_json::Value {
    serde_json::Value::Array(
        p.coords()
            .iter()
            .map(|c| serde_json::Value::String(hefty_core::numeric::format_scalar(c)))
            .collect(),
    )
}
