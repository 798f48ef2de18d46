//! Top-level report documents, as JSON or a text summary.

use jgl_core::report::{Note, Report};
use jgl_core::Ring;
use serde_json::{json, Map, Value};

use crate::json::SCHEMA_VERSION;

pub const TOOL: &str = concat!("jgl ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// A report plus the command that produced it and any computed data.
///
/// Timing is left out of the JSON so that identical commands give identical
/// bytes; the text summary shows it.
#[derive(Clone, Debug)]
pub struct Output {
    pub command: Vec<String>,
    pub ring: Option<Ring>,
    pub report: Report,
    pub data: Map<String, Value>,
}

impl Output {
    pub fn new(report: Report) -> Self {
        Output {
            command: Vec::new(),
            ring: None,
            report,
            data: Map::new(),
        }
    }

    pub fn ring(mut self, ring: Ring) -> Self {
        self.ring = Some(ring);
        self
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.data.insert(key.into(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .report
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), json!(c.name));
                m.insert(
                    "status".into(),
                    json!(if c.passed { "pass" } else { "fail" }),
                );
                if let Some(w) = &c.witness {
                    m.insert("witness".into(), json!(w));
                }
                if !c.notes.is_empty() {
                    let notes: Map<String, Value> = c
                        .notes
                        .iter()
                        .map(|(k, v)| (k.clone(), note_json(v)))
                        .collect();
                    m.insert("notes".into(), Value::Object(notes));
                }
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("kind".into(), json!("report"));
        m.insert("tool".into(), json!(TOOL));
        m.insert("command".into(), json!(self.command));
        m.insert(
            "ring".into(),
            self.ring.map_or(Value::Null, |r| json!(r.to_string())),
        );
        m.insert("passed".into(), json!(self.passed()));
        m.insert("checks".into(), Value::Array(checks));
        if !self.data.is_empty() {
            m.insert("data".into(), Value::Object(self.data.clone()));
        }
        Value::Object(m)
    }

    pub fn render(&self, format: Format, elapsed: Option<std::time::Duration>) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.text(elapsed),
        }
    }

    fn text(&self, elapsed: Option<std::time::Duration>) -> String {
        let mut out = format!("{TOOL}: {}\n", self.command.join(" "));
        if let Some(r) = self.ring {
            out += &format!("ring {r}\n");
        }
        for c in &self.report.checks {
            out += &format!("  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            if !c.notes.is_empty() {
                let notes: Vec<String> = c.notes.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out += &format!("  [{}]", notes.join(", "));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out += &format!("      witness: {w}\n");
            }
        }
        for (k, v) in &self.data {
            if !v.is_array() && !v.is_object() {
                out += &format!("  {k}: {v}\n");
            }
        }
        let failed = self.report.failures().count();
        out += &format!("{} checks, {} failed", self.report.checks.len(), failed);
        if let Some(t) = elapsed {
            out += &format!(", {:.2}s", t.as_secs_f64());
        }
        out.push('\n');
        out
    }
}

fn note_json(n: &Note) -> Value {
    match n {
        Note::Int(i) => json!(i),
        Note::Bool(b) => json!(b),
        Note::Text(s) => json!(s),
    }
}
