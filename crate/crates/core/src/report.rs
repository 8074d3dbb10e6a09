//! Named pass/fail results with deterministic witnesses.

use std::fmt;

use crate::linalg::{format_rat, Rat};

/// Where a check failed: the basis index tuple and the nonzero defect there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: Vec<Rat>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, defect: Vec<Rat>) -> Self {
        Witness { indices, defect }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        let def: Vec<String> = self.defect.iter().map(format_rat).collect();
        write!(f, "({}) defect [{}]", idx.join(", "), def.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Fail(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.checks.push(Check { name: name.into(), outcome });
    }

    /// Records `Pass` when `witness` is `None`, `Fail` otherwise.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        let outcome = witness.map_or(Outcome::Pass, Outcome::Fail);
        self.push(name, outcome);
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Outcome::Skip(reason.into()));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// No check failed. Skipped checks do not count as failures.
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `true` only when the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.failed())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().map(|c| c.name.as_str())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.outcome {
                Outcome::Pass => writeln!(f, "PASS {}", check.name)?,
                Outcome::Fail(w) => writeln!(f, "FAIL {}: {w}", check.name)?,
                Outcome::Skip(why) => writeln!(f, "SKIP {}: {why}", check.name)?,
            }
        }
        Ok(())
    }
}
