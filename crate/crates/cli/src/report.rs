//! Command reports with a fixed machine-readable schema.
//!
//! Every command produces the same JSON keys: `command`, `verdict`,
//! `witness`, `evidence`, `elapsed_ms`. Text output ends with a single
//! `verdict: …` summary line so pipelines can grep it.

use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub verdict: String,
    pub witness: Value,
    pub evidence: Value,
    pub elapsed_ms: u128,
    /// Human-readable detail lines, printed before the summary line.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, verdict: impl Into<String>) -> Self {
        Report {
            command,
            verdict: verdict.into(),
            witness: Value::Null,
            evidence: Value::Null,
            elapsed_ms: 0,
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let value = json!({
                "command": self.command,
                "verdict": self.verdict,
                "witness": self.witness,
                "evidence": self.evidence,
                "elapsed_ms": self.elapsed_ms,
            });
            let mut out = value.to_string();
            out.push('\n');
            out
        } else {
            let mut out = String::new();
            for line in &self.lines {
                out.push_str(line);
                out.push('\n');
            }
            out.push_str(&format!("verdict: {}\n", self.verdict));
            out
        }
    }
}
