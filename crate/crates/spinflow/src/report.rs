//! Verification reports: per-check records with computed/expected
//! values, text and JSON rendering, and exit-code mapping.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpinError};

/// How a check compares its computed value against the expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// |computed − expected| ≤ tol.
    Exact,
    /// Internal consistency residual, expected 0.
    Identity,
    /// computed ≥ expected − tol; abs_err records the violation.
    Bound,
    /// Boolean encoded as 0/1.
    Flag,
    /// A module error surfaced as a record; always failing, the
    /// description carries the message.
    Error,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub computed: f64,
    pub expected: f64,
    pub abs_err: f64,
    pub pass: bool,
    pub tag: CheckKind,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub tol: f64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(name: &str, tol: f64) -> Self {
        VerificationReport {
            name: name.to_string(),
            tol,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        if record.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(record);
    }

    pub fn equality(&mut self, id: &str, description: &str, computed: f64, expected: f64) {
        let abs_err = (computed - expected).abs();
        self.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            computed,
            expected,
            abs_err,
            pass: abs_err <= self.tol,
            tag: CheckKind::Exact,
        });
    }

    /// Residual check: computed defect against expected zero.
    pub fn identity(&mut self, id: &str, description: &str, residual: f64) {
        self.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            computed: residual,
            expected: 0.0,
            abs_err: residual.abs(),
            pass: residual.abs() <= self.tol,
            tag: CheckKind::Identity,
        });
    }

    /// Lower bound: computed ≥ expected within tolerance; the recorded
    /// error is the violation, zero when the bound holds with slack.
    pub fn bound(&mut self, id: &str, description: &str, computed: f64, expected: f64) {
        let violation = (expected - computed).max(0.0);
        self.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            computed,
            expected,
            abs_err: violation,
            pass: violation <= self.tol,
            tag: CheckKind::Bound,
        });
    }

    pub fn flag(&mut self, id: &str, description: &str, computed: bool, expected: bool) {
        let cv = computed as i32 as f64;
        let ev = expected as i32 as f64;
        self.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            computed: cv,
            expected: ev,
            abs_err: (cv - ev).abs(),
            pass: computed == expected,
            tag: CheckKind::Flag,
        });
    }

    /// A module error surfaced as a failing record instead of a crash.
    /// Fields stay finite so JSON rendering remains machine-readable.
    pub fn error(&mut self, id: &str, err: &SpinError) {
        self.push(CheckRecord {
            id: id.to_string(),
            description: format!("error: {err}"),
            computed: 0.0,
            expected: 0.0,
            abs_err: 0.0,
            pass: false,
            tag: CheckKind::Error,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

/// Renders a report as an aligned text table or as JSON.
pub fn render_report(report: &VerificationReport, format: &str) -> Result<String> {
    match format {
        "json" => {
            serde_json::to_string_pretty(report).map_err(|e| SpinError::SpecParse(e.to_string()))
        }
        "text" => {
            let mut out = String::new();
            out.push_str(&format!(
                "verification report: {} (tol {:.1e})\n",
                report.name, report.tol
            ));
            let id_width = report
                .checks
                .iter()
                .map(|c| c.id.len())
                .max()
                .unwrap_or(4)
                .max(4);
            for check in &report.checks {
                out.push_str(&format!(
                    "{}  {:<id_width$}  computed {:>14.9}  expected {:>14.9}  err {:>9.2e}  {}\n",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.id,
                    check.computed,
                    check.expected,
                    check.abs_err,
                    check.description,
                ));
            }
            out.push_str(&format!(
                "summary: {} passed, {} failed\n",
                report.summary.passed, report.summary.failed
            ));
            Ok(out)
        }
        other => Err(SpinError::UnknownFormat(other.to_string())),
    }
}

/// Parses a JSON rendering back into a report.
pub fn parse_report(text: &str) -> Result<VerificationReport> {
    serde_json::from_str(text).map_err(|e| SpinError::SpecParse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_and_exit_codes() {
        let mut r = VerificationReport::new("demo", 1e-9);
        r.equality("a", "exact value", 1.0, 1.0);
        r.bound("b", "lower bound with slack", 2.0, 1.5);
        assert_eq!(r.exit_code(), 0);
        r.equality("c", "broken", 1.0, 2.0);
        assert_eq!(r.summary.passed, 2);
        assert_eq!(r.summary.failed, 1);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn empty_report_is_valid_and_passes() {
        let r = VerificationReport::new("empty", 1e-9);
        assert_eq!(r.exit_code(), 0);
        let text = render_report(&r, "text").unwrap();
        assert!(text.contains("0 passed, 0 failed"));
    }

    #[test]
    fn text_rendering_marks_pass_and_fail() {
        let mut r = VerificationReport::new("demo", 1e-9);
        r.equality("ok", "fine", 0.5, 0.5);
        r.equality("bad", "broken", 0.5, 0.75);
        let text = render_report(&r, "text").unwrap();
        assert!(text.contains("PASS  ok"));
        assert!(text.contains("FAIL  bad"));
        assert!(text.contains("summary: 1 passed, 1 failed"));
    }

    #[test]
    fn json_round_trips() {
        let mut r = VerificationReport::new("demo", 1e-9);
        r.equality("a", "value", 0.25, 0.25);
        r.flag("f", "flag", true, true);
        let json = render_report(&r, "json").unwrap();
        let back = parse_report(&json).unwrap();
        assert_eq!(back.name, r.name);
        assert_eq!(back.checks.len(), 2);
        assert_eq!(back.summary.passed, 2);
        assert!(json.contains("\"pass\": true"));
        assert!(json.contains("\"abs_err\""));
    }

    #[test]
    fn error_records_fail_and_stay_machine_readable() {
        let mut r = VerificationReport::new("demo", 1e-9);
        r.error("broken", &SpinError::ZeroSpinor);
        assert_eq!(r.exit_code(), 1);
        let json = render_report(&r, "json").unwrap();
        let back = parse_report(&json).unwrap();
        assert!(!back.checks[0].pass);
        assert!(back.checks[0].description.contains("zero spinor"));
    }

    #[test]
    fn unknown_format_is_rejected() {
        let r = VerificationReport::new("demo", 1e-9);
        assert!(matches!(
            render_report(&r, "yaml"),
            Err(SpinError::UnknownFormat(_))
        ));
    }

    #[test]
    fn rendering_is_deterministic() {
        let mut r = VerificationReport::new("demo", 1e-9);
        r.equality("a", "value", 1.0 / 3.0, 1.0 / 3.0);
        let a = render_report(&r, "json").unwrap();
        let b = render_report(&r, "json").unwrap();
        assert_eq!(a, b);
    }
}
