//! Structured verification reports.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

/// Bumped whenever a field is added, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// A failed check. For graph comparisons `graphs` holds graph6 strings and
/// `charpoly` the shared polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub subject: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub graphs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<String>,
    pub detail: String,
}

/// Something worth reporting that does not fail the run, e.g. a mismatch
/// between a transcribed term table and the computed polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Individual checks evaluated (identities, vertices, tuples, ...).
    pub checks: u64,
    pub graphs_enumerated: u64,
    /// Pairwise characteristic-polynomial comparisons.
    pub comparisons: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub scope: String,
    /// Parameter bounds, e.g. `"p" -> "3..=8"`.
    pub grid: BTreeMap<String, String>,
    /// The finite range actually checked, when the claim is about all `n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_range: Option<String>,
    pub pass: bool,
    pub counts: Counts,
    pub counterexamples: Vec<Counterexample>,
    pub findings: Vec<Finding>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, scope: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            scope: scope.into(),
            grid: BTreeMap::new(),
            certified_range: None,
            pass: true,
            counts: Counts::default(),
            counterexamples: Vec::new(),
            findings: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn with_grid(mut self, name: &str, range: impl fmt::Display) -> Self {
        self.grid.insert(name.to_string(), range.to_string());
        self
    }

    pub fn fail(&mut self, subject: impl Into<String>, detail: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            subject: subject.into(),
            graphs: Vec::new(),
            charpoly: None,
            detail: detail.into(),
        });
        self.pass = false;
    }

    pub fn push_counterexample(&mut self, c: Counterexample) {
        self.counterexamples.push(c);
        self.pass = false;
    }

    pub fn note(&mut self, subject: impl Into<String>, detail: impl Into<String>) {
        self.findings.push(Finding {
            subject: subject.into(),
            detail: detail.into(),
        });
    }

    /// Records a boolean check, failing the report when it does not hold.
    pub fn check(&mut self, ok: bool, subject: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.counts.checks += 1;
        if !ok {
            self.fail(subject.to_string(), detail());
        }
    }

    /// Folds another report's results into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.counts.checks += other.counts.checks;
        self.counts.graphs_enumerated += other.counts.graphs_enumerated;
        self.counts.comparisons += other.counts.comparisons;
        self.pass &= other.pass;
        self.counterexamples.extend(other.counterexamples);
        self.findings.extend(other.findings);
    }

    /// Sets the pass flag from the counterexample list and records the time
    /// since `started`.
    pub fn finish(mut self, started: Instant) -> Self {
        self.pass = self.counterexamples.is_empty();
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// The same report with the timing zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        writeln!(f, "scope: {}", self.scope)?;
        for (k, v) in &self.grid {
            writeln!(f, "  {k} = {v}")?;
        }
        if let Some(range) = &self.certified_range {
            writeln!(f, "certified range: {range}")?;
        }
        writeln!(
            f,
            "checks: {}, graphs enumerated: {}, comparisons: {}, time: {} ms",
            self.counts.checks,
            self.counts.graphs_enumerated,
            self.counts.comparisons,
            self.wall_time_ms
        )?;
        if !self.counterexamples.is_empty() {
            writeln!(f, "counterexamples ({}):", self.counterexamples.len())?;
            for c in &self.counterexamples {
                writeln!(f, "  {}: {}", c.subject, c.detail)?;
                if !c.graphs.is_empty() {
                    writeln!(f, "    graph6: {}", c.graphs.join(" "))?;
                }
                if let Some(p) = &c.charpoly {
                    writeln!(f, "    charpoly: {p}")?;
                }
            }
        }
        if !self.findings.is_empty() {
            writeln!(f, "findings ({}):", self.findings.len())?;
            for finding in &self.findings {
                writeln!(f, "  {}: {}", finding.subject, finding.detail)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_counterexamples() {
        let mut r = VerificationReport::new("demo", "unit");
        r.check(true, "a", || unreachable!());
        r.note("b", "informational");
        let r2 = r.clone().finish(Instant::now());
        assert!(r2.pass);
        r.check(false, "c", || "broken".into());
        let r = r.finish(Instant::now());
        assert!(!r.pass);
        assert_eq!(r.counts.checks, 2);
        assert_eq!(r.counterexamples[0].subject, "c");
    }

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new("ds", "n = 6").with_grid("n", 6);
        r.certified_range = Some("n = 6".into());
        r.push_counterexample(Counterexample {
            subject: "pair".into(),
            graphs: vec!["E?~w".into(), "E?^w".into()],
            charpoly: Some("x^6".into()),
            detail: "cospectral".into(),
        });
        r.note("x", "y");
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_string().contains("FAIL"));
    }
}
