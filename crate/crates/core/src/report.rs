//! Machine-readable run reports.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching};
use crate::verify::verify_urm_cycle;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::time::Duration;

pub const REPORT_SCHEMA_ID: &str = "urm-report/1";
/// JSON Schema every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/urm-report-1.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportResult {
    pub verdict: Verdict,
    pub size: Option<usize>,
    pub witness: Option<Vec<Edge>>,
    pub optimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl ReportResult {
    pub fn new(verdict: Verdict) -> Self {
        ReportResult {
            verdict,
            size: None,
            witness: None,
            optimal: None,
            target: None,
            cycle: None,
            details: None,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Counters {
    pub states: Option<u64>,
    pub nodes: Option<u64>,
    pub trials: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub total_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input_digest: String,
    pub algorithm: Option<String>,
    pub seed: Option<u64>,
    pub jobs: usize,
    pub result: ReportResult,
    pub counters: Counters,
    pub timing: Timing,
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

impl RunReport {
    pub fn new(command: &'static str, input_digest: String, jobs: usize, result: ReportResult, elapsed: Duration) -> Self {
        RunReport {
            schema: REPORT_SCHEMA_ID,
            command,
            input_digest,
            algorithm: None,
            seed: None,
            jobs,
            result,
            counters: Counters::default(),
            timing: Timing {
                total_ms: elapsed.as_secs_f64() * 1e3,
            },
        }
    }

    /// Re-verifies the witness against `g` before the report leaves the process.
    pub fn checked(self, g: &Graph) -> Result<Self> {
        if let Some(w) = &self.result.witness {
            let m = Matching::new(g, w.iter().copied())?;
            if !verify_urm_cycle(g, &m)?.is_unique() {
                return Err(Error::Internal("reported witness is not uniquely restricted".into()));
            }
        }
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable_and_framed() {
        assert_eq!(digest(&[b"ab", b"c"]), digest(&[b"ab", b"c"]));
        assert_ne!(digest(&[b"ab", b"c"]), digest(&[b"a", b"bc"]));
        assert_eq!(digest(&[b""]).len(), 7 + 64);
    }

    #[test]
    fn witness_is_rechecked() {
        let g = Graph::cycle(4);
        let mut r = ReportResult::new(Verdict::Yes);
        r.witness = Some(vec![(0, 1), (2, 3)]);
        let rep = RunReport::new("solve", digest(&[]), 1, r, Duration::ZERO);
        assert!(rep.checked(&g).is_err());
    }

    #[test]
    fn schema_is_valid_json() {
        let v: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
        assert_eq!(v["$id"], REPORT_SCHEMA_ID);
    }
}
