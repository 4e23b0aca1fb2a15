//! Law-check reports with concrete witnesses.
//!
//! A check scans the whole structure (no short-circuit), counts every
//! violation, and keeps the first few as witnesses. Witness details are
//! rendered with element labels at collection time so reports read well on
//! their own.

use std::fmt;

use crate::poset::ElementId;

/// Default number of witnesses kept per law.
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// One concrete counterexample to a law.
#[derive(Debug, Clone)]
pub struct Violation {
    /// The elements involved, in the order the law quantifies them.
    pub elements: Vec<ElementId>,
    /// Human-readable description, already formatted with labels.
    pub detail: String,
}

/// Verdict for a single law: name, violation count, and capped witnesses.
#[derive(Debug, Clone)]
pub struct LawCheck {
    name: String,
    witnesses: Vec<Violation>,
    total: usize,
    cap: usize,
}

impl LawCheck {
    pub fn new(name: impl Into<String>) -> Self {
        Self::with_cap(name, DEFAULT_WITNESS_CAP)
    }

    pub fn with_cap(name: impl Into<String>, cap: usize) -> Self {
        LawCheck {
            name: name.into(),
            witnesses: Vec::new(),
            total: 0,
            cap,
        }
    }

    /// Records one violation; keeps it as a witness if under the cap.
    pub fn record(&mut self, elements: Vec<ElementId>, detail: impl Into<String>) {
        self.total += 1;
        if self.witnesses.len() < self.cap {
            self.witnesses.push(Violation {
                elements,
                detail: detail.into(),
            });
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn passed(&self) -> bool {
        self.total == 0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn witnesses(&self) -> &[Violation] {
        &self.witnesses
    }

    pub fn render_into(&self, out: &mut String) {
        if self.passed() {
            out.push_str(&format!("law {}: pass\n", self.name));
        } else {
            let plural = if self.total == 1 { "" } else { "s" };
            out.push_str(&format!(
                "law {}: FAIL ({} violation{})\n",
                self.name, self.total, plural
            ));
            for w in &self.witnesses {
                out.push_str(&format!("  witness: {}\n", w.detail));
            }
            if self.total > self.witnesses.len() {
                out.push_str(&format!(
                    "  ... {} more not shown\n",
                    self.total - self.witnesses.len()
                ));
            }
        }
    }
}

impl fmt::Display for LawCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render_into(&mut s);
        f.write_str(s.trim_end())
    }
}

/// A bundle of law checks plus free-form warnings and informational notes.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<LawCheck>,
    pub warnings: Vec<String>,
    pub infos: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: LawCheck) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(LawCheck::total).sum()
    }

    pub fn check(&self, name: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.name() == name)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
        self.infos.extend(other.infos);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            c.render_into(&mut out);
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for i in &self.infos {
            out.push_str(&format!("info: {i}\n"));
        }
        out
    }
}
