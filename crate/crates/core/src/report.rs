//! Verification reports and their text and JSON renderings.

use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseVerdict {
    Pass,
    /// The computation contradicts the expected outcome.
    Fail,
    /// The expected outcome holds or is documented as unreproducible, but a
    /// stated formula or value disagrees with the computation.
    Discrepancy,
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseVerdict::Pass => "PASS",
            CaseVerdict::Fail => "FAIL",
            CaseVerdict::Discrepancy => "DISCREPANCY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub id: String,
    pub verdict: CaseVerdict,
    /// The expected outcome, as formulas and values.
    pub claim: String,
    /// Intermediate exact values, in order. Never empty.
    pub trail: Vec<String>,
    pub discrepancies: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn render_text(reports: &[RunReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("[{}] {}\n  claim: {}\n", r.verdict, r.id, r.claim));
        for t in &r.trail {
            out.push_str(&format!("  - {t}\n"));
        }
    }
    let flagged: Vec<&RunReport> = reports.iter().filter(|r| !r.discrepancies.is_empty()).collect();
    if !flagged.is_empty() {
        out.push_str("\nDiscrepancies\n");
        for r in flagged {
            for d in &r.discrepancies {
                out.push_str(&format!("  {}: {d}\n", r.id));
            }
        }
    }
    if !reports.is_empty() {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count();
        out.push_str(&format!(
            "\n{} cases: {} pass, {} discrepancy, {} fail\n",
            reports.len(),
            count(CaseVerdict::Pass),
            count(CaseVerdict::Discrepancy),
            count(CaseVerdict::Fail)
        ));
    }
    out
}

pub fn render_json(reports: &[RunReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn emit_report(reports: &[RunReport], format: Format, sink: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Text => sink.write_all(render_text(reports).as_bytes()),
        Format::Json => {
            sink.write_all(render_json(reports).as_bytes())?;
            sink.write_all(b"\n")
        }
    }
}

/// Whether the run should exit nonzero.
pub fn any_failed(reports: &[RunReport]) -> bool {
    reports.iter().any(|r| r.verdict == CaseVerdict::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<RunReport> {
        vec![
            RunReport {
                id: "a.one".into(),
                verdict: CaseVerdict::Pass,
                claim: "x = 1".into(),
                trail: vec!["x = 1".into()],
                discrepancies: vec![],
            },
            RunReport {
                id: "b.two".into(),
                verdict: CaseVerdict::Discrepancy,
                claim: "y = 2/3".into(),
                trail: vec!["y = 2/3".into()],
                discrepancies: vec!["printed 1/3".into()],
            },
        ]
    }

    #[test]
    fn text_layout() {
        let text = render_text(&sample());
        assert!(text.starts_with("[PASS] a.one\n  claim: x = 1\n  - x = 1\n"));
        assert!(text.contains("\nDiscrepancies\n  b.two: printed 1/3\n"));
        assert!(text.ends_with("2 cases: 1 pass, 1 discrepancy, 0 fail\n"));
    }

    #[test]
    fn json_round_trip() {
        let json = render_json(&sample());
        assert!(json.contains("\"verdict\": \"discrepancy\""));
        let back: Vec<RunReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sample());
    }

    #[test]
    fn empty_documents() {
        assert_eq!(render_text(&[]), "");
        let mut buf = Vec::new();
        emit_report(&[], Format::Json, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "[]\n");
    }

    #[test]
    fn exit_policy() {
        let mut r = sample();
        assert!(!any_failed(&r));
        r[0].verdict = CaseVerdict::Fail;
        assert!(any_failed(&r));
    }
}
