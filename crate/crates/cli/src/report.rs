use std::fmt;
use std::time::Duration;

use serde_json::{json, Map, Value};

use cornerkit::io::to_pretty_json;

use crate::input::Loaded;
use crate::Format;

#[derive(Debug)]
pub struct Failure(pub String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<cornerkit::Error> for Failure {
    fn from(e: cornerkit::Error) -> Self {
        Failure(e.to_string())
    }
}

pub struct Outcome {
    pub text: String,
    pub code: u8,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<(String, String)>,
    pub verdict: bool,
    pub result: Map<String, Value>,
    pub warnings: Vec<String>,
    pub timing: Option<Duration>,
}

impl Report {
    pub fn new(command: &'static str, inputs: &[&Loaded]) -> Self {
        Report {
            command,
            inputs: inputs.iter().map(|l| (l.name.clone(), l.sha256())).collect(),
            verdict: false,
            result: Map::new(),
            warnings: Vec::new(),
            timing: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.into(), value.into());
    }

    pub fn to_value(&self) -> Value {
        let inputs: Vec<Value> = self.inputs.iter().map(|(n, h)| json!({ "name": n, "sha256": h })).collect();
        let mut v = json!({
            "command": self.command,
            "inputs": inputs,
            "verdict": self.verdict,
            "result": Value::Object(self.result.clone()),
        });
        if !self.warnings.is_empty() {
            v["warnings"] = json!(self.warnings);
        }
        if let Some(t) = self.timing {
            v["wall_time_ms"] = json!(t.as_secs_f64() * 1000.0);
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_pretty_json(&self.to_value()) + "\n",
            Format::Text => {
                let mut out = format!("{} {}\n", if self.verdict { "PASS" } else { "FAIL" }, self.command);
                for (name, hash) in &self.inputs {
                    out += &format!("  input {name} sha256:{}\n", &hash[..16]);
                }
                for (k, v) in &self.result {
                    out += &format!("  {k}: {}\n", text_value(v));
                }
                for w in &self.warnings {
                    out += &format!("  warning: {w}\n");
                }
                if let Some(t) = self.timing {
                    out += &format!("  wall time: {:.3} ms\n", t.as_secs_f64() * 1000.0);
                }
                out
            }
        }
    }

    pub fn finish(self, format: Format) -> Outcome {
        Outcome { code: if self.verdict { 0 } else { 1 }, text: self.render(format) }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
