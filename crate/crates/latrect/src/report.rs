//! Machine-readable run reports.
//!
//! Struct fields are declared in alphabetical order so the serialized JSON has
//! sorted keys at every level; the key order is part of the output format.

use serde::Serialize;

/// Process exit codes shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitCode {
    Success = 0,
    Usage = 2,
    Mismatch = 3,
    External = 4,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub counts: Vec<CountRecord>,
    pub exit_status: i32,
    pub methods: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub shapes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub verification: Vec<Outcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    pub method: String,
    pub shape: String,
    pub value: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub name: String,
    pub passed: bool,
}

impl Outcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Outcome {
            detail,
            name: name.into(),
            passed,
        }
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let report = RunReport {
            command: vec!["count".into(), "aztec:1".into()],
            counts: vec![CountRecord {
                method: "fast".into(),
                shape: "aztec:1".into(),
                value: 9,
            }],
            exit_status: 0,
            methods: vec!["fast".into()],
            output: Some("##\n".into()),
            shapes: vec!["aztec:1".into()],
            timing_ms: Some(1.5),
            verification: vec![Outcome::new("agreement", true, Some("ok".into()))],
        };
        let text = report.to_json();
        // serde_json's Value keeps keys in a BTreeMap, i.e. sorted
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut resorted = serde_json::to_string_pretty(&value).unwrap();
        resorted.push('\n');
        assert_eq!(text, resorted);
    }

    #[test]
    fn wide_counts_serialize_exactly() {
        let record = CountRecord {
            method: "formula".into(),
            shape: "aztec:1".into(),
            value: u128::MAX,
        };
        let text = serde_json::to_string(&record).unwrap();
        assert!(text.contains(&format!(":{}}}", u128::MAX)), "{text}");
    }
}
