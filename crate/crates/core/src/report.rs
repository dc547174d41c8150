//! Check reports.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Counterexample (on failure) or reason (when skipped).
    pub witness: Option<String>,
}

/// Ordered list of checks plus named computed quantities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub conventions: Vec<String>,
    pub checks: Vec<Check>,
    pub computed: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), status, witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Status::Skipped, Some(reason.into()));
    }

    /// Records pass when `ok`, otherwise fail with the lazily built witness.
    pub fn expect(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> bool {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
        ok
    }

    /// Runs `probe` on every item; the first `Some(witness)` fails the check.
    pub fn check_all<T>(
        &mut self,
        name: impl Into<String>,
        items: impl IntoIterator<Item = T>,
        mut probe: impl FnMut(T) -> Option<String>,
    ) -> bool {
        for item in items {
            if let Some(w) = probe(item) {
                self.fail(name, w);
                return false;
            }
        }
        self.pass(name);
        true
    }

    pub fn compute(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.computed.push((name.into(), value.into()));
    }

    pub fn convention(&mut self, text: impl Into<String>) {
        self.conventions.push(text.into());
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.conventions {
            if !self.conventions.contains(&c) {
                self.conventions.push(c);
            }
        }
        self.checks.extend(other.checks);
        self.computed.extend(other.computed);
    }

    /// Every check that ran passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn computed_value(&self, name: &str) -> Option<&str> {
        self.computed.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        if !self.conventions.is_empty() {
            writeln!(f, "conventions:")?;
            for c in &self.conventions {
                writeln!(f, "  - {c}")?;
            }
        }
        if !self.computed.is_empty() {
            writeln!(f, "computed:")?;
            for (name, value) in &self.computed {
                writeln!(f, "  {name} = {value}")?;
            }
        }
        writeln!(f, "checks:")?;
        for c in &self.checks {
            match &c.witness {
                Some(w) => writeln!(f, "  [{}] {}: {}", c.status.as_str(), c.name, w)?,
                None => writeln!(f, "  [{}] {}", c.status.as_str(), c.name)?,
            }
        }
        let failed = self.failures().count();
        write!(f, "summary: {} checks, {} failed", self.checks.len(), failed)
    }
}
