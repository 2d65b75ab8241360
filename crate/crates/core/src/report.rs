//! Violation reports and theorem-check reports.

use alloc::string::String;
use alloc::vec::Vec;

/// One failed axiom instance. `witness` is the tuple that, replayed against
/// the checked structure, exhibits the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<W> {
    pub axiom: &'static str,
    pub witness: Vec<W>,
}

/// Result of an exhaustive axiom check. Every violation is listed, not only
/// the first one found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport<W> {
    pub violations: Vec<Violation<W>>,
}

impl<W> Default for ValidationReport<W> {
    fn default() -> Self {
        ValidationReport { violations: Vec::new() }
    }
}

impl<W: PartialEq> ValidationReport<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &'static str, witness: Vec<W>) {
        self.violations.push(Violation { axiom, witness });
    }

    /// Records a violation when `holds` is false.
    pub fn require(&mut self, holds: bool, axiom: &'static str, witness: impl FnOnce() -> Vec<W>) {
        if !holds {
            self.push(axiom, witness());
        }
    }

    pub fn contains(&self, axiom: &str, witness: &[W]) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom == axiom && v.witness.as_slice() == witness)
    }

    pub fn axioms_violated(&self) -> Vec<&'static str> {
        let mut names: Vec<&'static str> = self.violations.iter().map(|v| v.axiom).collect();
        names.sort_unstable();
        names.dedup();
        names
    }
}

/// Outcome of one executable theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub name: &'static str,
    pub passed: bool,
    /// Human-readable descriptions of each failed instance.
    pub failures: Vec<String>,
    /// Number of individual instances checked.
    pub instances: usize,
}

impl TheoremReport {
    pub fn new(name: &'static str) -> Self {
        TheoremReport { name, passed: true, failures: Vec::new(), instances: 0 }
    }

    pub fn check(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !holds {
            self.passed = false;
            self.failures.push(describe());
        }
    }

    pub fn fail(&mut self, message: String) {
        self.passed = false;
        self.failures.push(message);
    }
}
