//! Structured verification results.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    /// Which named result of the theory the identity instantiates.
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    /// Sizes of the elements involved, in PBW terms.
    pub terms: BTreeMap<String, usize>,
    pub elapsed_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Record {
            name: name.into(),
            anchor: anchor.into(),
            params: BTreeMap::new(),
            pass: false,
            terms: BTreeMap::new(),
            elapsed_us: 0,
            detail: None,
        }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn terms(&mut self, k: &str, count: usize) {
        self.terms.insert(k.to_string(), count);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        let s = s.into();
        self.detail = Some(match self.detail.take() {
            Some(d) => format!("{d}; {s}"),
            None => s,
        });
    }

    /// Times `check`, storing its verdict. An error counts as a failure and
    /// is kept in `detail`.
    pub fn run(mut self, check: impl FnOnce(&mut Record) -> Result<bool>) -> Record {
        let start = Instant::now();
        let out = check(&mut self);
        self.elapsed_us = start.elapsed().as_micros() as u64;
        match out {
            Ok(p) => self.pass = p,
            Err(e) => {
                self.pass = false;
                self.note(format!("error: {e}"));
            }
        }
        self
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "[{}] {} ({}) {} {:.1}ms",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.anchor,
            params.join(" "),
            self.elapsed_us as f64 / 1000.0
        )?;
        if let Some(d) = &self.detail {
            write!(f, " :: {d}")?;
        }
        Ok(())
    }
}

/// A named collection of records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub records: Vec<Record>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), params: BTreeMap::new(), records: Vec::new() }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = Record>) {
        self.records.extend(rs);
    }

    /// Deterministic order: by name, then by parameters.
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.records.iter().filter(|r| r.pass).count();
        writeln!(f, "suite {}: {}/{} passed", self.suite, ok, self.records.len())?;
        for r in &self.records {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
