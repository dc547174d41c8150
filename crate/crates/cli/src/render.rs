//! Text and JSON output.

use hopf_kernel::{Report, Status};
use serde::Serialize;

/// Everything one invocation produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: String,
    pub source: String,
    pub reports: Vec<Report>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonValue<'a> {
    name: &'a str,
    value: &'a str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    title: &'a str,
    conventions: &'a [String],
    computed: Vec<JsonValue<'a>>,
    checks: Vec<JsonCheck<'a>>,
}

#[derive(Serialize)]
struct JsonOutcome<'a> {
    command: &'a str,
    source: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_unix: Option<u64>,
    reports: Vec<JsonReport<'a>>,
    summary: Tally,
    result: &'static str,
}

impl Outcome {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for c in self.reports.iter().flat_map(|r| &r.checks) {
            t.checks += 1;
            match c.status {
                Status::Pass => t.passed += 1,
                Status::Fail => t.failed += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
        t
    }

    /// 0 when no check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.tally().failed == 0 {
            0
        } else {
            1
        }
    }

    fn result(&self) -> &'static str {
        if self.exit_code() == 0 {
            "pass"
        } else {
            "fail"
        }
    }

    /// Full reports followed by an overall summary line.
    pub fn to_text(&self, generated_unix: Option<u64>) -> String {
        let mut out = String::new();
        if let Some(t) = generated_unix {
            out.push_str(&format!("generated at unix time {t}\n\n"));
        }
        for r in &self.reports {
            out.push_str(&r.to_string());
            out.push_str("\n\n");
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }

    /// `name = value` lines, then any checks.
    pub fn to_compact_text(&self, generated_unix: Option<u64>) -> String {
        let mut out = String::new();
        if let Some(t) = generated_unix {
            out.push_str(&format!("generated at unix time {t}\n"));
        }
        for r in &self.reports {
            for (name, value) in &r.computed {
                out.push_str(&format!("{name} = {value}\n"));
            }
        }
        for c in self.reports.iter().flat_map(|r| &r.checks) {
            match &c.witness {
                Some(w) => out.push_str(&format!("[{}] {}: {}\n", c.status.as_str(), c.name, w)),
                None => out.push_str(&format!("[{}] {}\n", c.status.as_str(), c.name)),
            }
        }
        if self.tally().checks > 0 {
            out.push_str(&self.summary_line());
            out.push('\n');
        }
        out
    }

    fn summary_line(&self) -> String {
        let t = self.tally();
        format!("result: {} ({} checks, {} passed, {} failed, {} skipped)", self.result(), t.checks, t.passed, t.failed, t.skipped)
    }

    pub fn to_json(&self, generated_unix: Option<u64>) -> String {
        let reports = self
            .reports
            .iter()
            .map(|r| JsonReport {
                title: &r.title,
                conventions: &r.conventions,
                computed: r.computed.iter().map(|(name, value)| JsonValue { name, value }).collect(),
                checks: r
                    .checks
                    .iter()
                    .map(|c| JsonCheck { name: &c.name, status: c.status.as_str(), witness: c.witness.as_deref() })
                    .collect(),
            })
            .collect();
        let doc = JsonOutcome {
            command: &self.command,
            source: &self.source,
            generated_unix,
            reports,
            summary: self.tally(),
            result: self.result(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}
