//! Pass/fail records for the verification suites.

use serde::Serialize;

use crate::exact::PolyMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub relation_label: String,
    pub status: Status,
    /// Where the check failed (matrix position or series order), or how far
    /// it was verified.
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, label: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.relation_label == label)
    }

    pub fn push(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>, residual: Option<String>) {
        self.entries.push(ReportEntry {
            relation_label: label.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            residual,
        });
    }

    /// Records `lhs == rhs` as an exact matrix identity, locating the first
    /// mismatching entry on failure.
    pub fn check_matrices(&mut self, label: impl Into<String>, lhs: &PolyMatrix, rhs: &PolyMatrix) -> bool {
        let label = label.into();
        match lhs.checked_sub(rhs) {
            Err(e) => {
                self.push(label, false, e.to_string(), None);
                false
            }
            Ok(diff) => match diff.first_nonzero() {
                None => {
                    self.push(label, true, "exact", None);
                    true
                }
                Some((i, j)) => {
                    self.push(
                        label,
                        false,
                        format!("first mismatch at ({i},{j}): lhs {} vs rhs {}", lhs.get(i, j), rhs.get(i, j)),
                        Some(diff.get(i, j).to_string()),
                    );
                    false
                }
            },
        }
    }

    /// Appends another report's entries with `prefix/` on each label.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut e in other.entries {
            e.relation_label = format!("{prefix}/{}", e.relation_label);
            self.entries.push(e);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| a.relation_label.cmp(&b.relation_label));
        serde_json::json!({
            "schema": crate::export::SCHEMA,
            "suite": self.suite,
            "status": if self.passed() { Status::Pass } else { Status::Fail },
            "entries": entries,
        })
    }

    /// One line per entry, in insertion order.
    pub fn summary_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                let tag = match e.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                format!("[{tag}] {} :: {} :: {}", self.suite, e.relation_label, e.detail)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BiPoly;

    #[test]
    fn locates_first_mismatch() {
        let a = PolyMatrix::identity(3);
        let mut b = PolyMatrix::identity(3);
        b.set(1, 2, BiPoly::h());
        let mut r = VerificationReport::new("t");
        assert!(r.check_matrices("same", &a, &a));
        assert!(!r.check_matrices("diff", &a, &b));
        assert!(!r.passed());
        let e = r.entry("diff").unwrap();
        assert!(e.detail.contains("(1,2)"));
        assert_eq!(e.residual.as_deref(), Some("-h"));
    }

    #[test]
    fn json_is_sorted_by_label() {
        let mut r = VerificationReport::new("t");
        r.push("b", true, "", None);
        r.push("a", true, "", None);
        let v = r.to_json();
        assert_eq!(v["entries"][0]["relation_label"], "a");
        assert_eq!(v["status"], "pass");
    }
}
