//! Named pass/fail checks with optional witnesses and notes.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::identity::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Note {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Note::Int(n) => write!(f, "{n}"),
            Note::Bool(b) => write!(f, "{b}"),
            Note::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Note {
    fn from(n: i64) -> Self {
        Note::Int(n)
    }
}

impl From<usize> for Note {
    fn from(n: usize) -> Self {
        Note::Int(n as i64)
    }
}

impl From<u64> for Note {
    fn from(n: u64) -> Self {
        Note::Int(n as i64)
    }
}

impl From<bool> for Note {
    fn from(b: bool) -> Self {
        Note::Bool(b)
    }
}

impl From<&str> for Note {
    fn from(s: &str) -> Self {
        Note::Text(s.into())
    }
}

impl From<String> for Note {
    fn from(s: String) -> Self {
        Note::Text(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub notes: Vec<(String, Note)>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, true)
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            witness: Some(witness.into()),
            ..Self::new(name, false)
        }
    }

    pub fn from_verdict(name: impl Into<String>, verdict: &Verdict) -> Self {
        let mut c = Self::new(name, verdict.passed());
        c.witness = verdict.witness().map(|w| w.to_string());
        c.note("cases", verdict.cases())
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn note(mut self, key: &str, value: impl Into<Note>) -> Self {
        self.notes.push((key.into(), value.into()));
        self
    }

    pub fn get_note(&self, key: &str) -> Option<&Note> {
        self.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Adds every check of `other` with `prefix/` prepended to its name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = alloc::format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            for (k, v) in &c.notes {
                write!(f, " {k}={v}")?;
            }
            if let Some(w) = &c.witness {
                write!(f, " witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
