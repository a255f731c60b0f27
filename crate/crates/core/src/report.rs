//! Outcome of a verification run.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Pass/fail outcome with counts, the first failing witness and free-form
/// notes. Sub-checks are folded in with [`Report::absorb`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub counts: Vec<(String, usize)>,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Self { check: check.into(), pass: true, counts: Vec::new(), witness: None, notes: Vec::new() }
    }

    pub fn count(&mut self, name: impl Into<String>, value: usize) -> &mut Self {
        self.counts.push((name.into(), value));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the report failed. Only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) -> &mut Self {
        self.pass = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
        self
    }

    /// Fails with `witness` unless `ok`.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        if !ok {
            self.fail(witness());
        }
        ok
    }

    /// Folds a sub-report in, prefixing its witness with its check name.
    pub fn absorb(&mut self, sub: Report) -> &mut Self {
        if !sub.pass {
            let w = sub.witness.unwrap_or_default();
            self.fail(alloc::format!("{}: {}", sub.check, w));
        }
        self.notes.extend(sub.notes);
        self
    }

    /// Value of a named count, if recorded.
    pub fn get(&self, name: &str) -> Option<usize> {
        self.counts.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.pass { "PASS" } else { "FAIL" }, self.check)?;
        if let (Some(a), Some(b)) = (self.get("domain"), self.get("codomain")) {
            write!(f, " ({a} = {b})")?;
        }
        for (name, value) in &self.counts {
            if name != "domain" && name != "codomain" {
                write!(f, " {name}={value}")?;
            }
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}
