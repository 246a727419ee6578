//! Reporting types shared by the law harness and the CLI: per-instance
//! law reports (with reloadable counterexamples) and per-law summaries,
//! both serializable as JSON lines.

use serde::{Deserialize, Serialize};

/// The outcome of checking one law on one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawReport {
    /// Which law was checked.
    pub law_id: String,
    /// Which generated instance (0-based) within the run.
    pub instance: usize,
    /// Did the instance satisfy the law (vacuously or not)?
    pub passed: bool,
    /// For failures: the offending relations in the text file format,
    /// named `R0`, `R1`, ... in argument order, ready for `recheck`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Human-readable explanation (which side differed, or why the
    /// instance was vacuous).
    pub detail: String,
}

/// One line per law when summarizing a whole run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawSummary {
    pub law: String,
    pub instances: usize,
    pub failures: usize,
}

impl LawReport {
    pub fn pass(law_id: &str, instance: usize) -> Self {
        LawReport {
            law_id: law_id.to_string(),
            instance,
            passed: true,
            counterexample: None,
            detail: String::new(),
        }
    }

    pub fn vacuous(law_id: &str, instance: usize, detail: impl Into<String>) -> Self {
        LawReport {
            law_id: law_id.to_string(),
            instance,
            passed: true,
            counterexample: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        law_id: &str,
        instance: usize,
        counterexample: String,
        detail: impl Into<String>,
    ) -> Self {
        LawReport {
            law_id: law_id.to_string(),
            instance,
            passed: false,
            counterexample: Some(counterexample),
            detail: detail.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = LawReport::fail("some-law", 3, "carrier A = x y\n".into(), "left != right");
        let s = serde_json::to_string(&r).unwrap();
        let back: LawReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.law_id, "some-law");
        assert!(!back.passed);
        assert!(back.counterexample.is_some());
        let p = LawReport::pass("some-law", 0);
        let s = serde_json::to_string(&p).unwrap();
        assert!(!s.contains("counterexample"));
        let sum = LawSummary { law: "some-law".into(), instances: 10, failures: 1 };
        let s = serde_json::to_string(&sum).unwrap();
        assert_eq!(s, r#"{"law":"some-law","instances":10,"failures":1}"#);
    }
}
