use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-guard")]
    SkippedGuard,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedGuard => "skipped-guard",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Subspaces or generator matrices in the matrix text format.
    Matrices {
        label: String,
        matrices: Vec<String>,
    },
    Vector {
        label: String,
        entries: Vec<u32>,
    },
    /// Vertex v of the first graph maps to `map[v]` of the second.
    Isomorphism {
        label: String,
        map: Vec<usize>,
    },
    Message {
        text: String,
    },
}

impl Witness {
    pub fn subspaces<'a>(label: &str, items: impl IntoIterator<Item = &'a Subspace>) -> Witness {
        Witness::Matrices {
            label: label.into(),
            matrices: items.into_iter().map(Subspace::to_text).collect(),
        }
    }

    pub fn matrix(label: &str, m: &Matrix) -> Witness {
        Witness::Matrices {
            label: label.into(),
            matrices: vec![m.to_text()],
        }
    }

    pub fn message(text: impl Into<String>) -> Witness {
        Witness::Message { text: text.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub seed: Option<u64>,
    pub version: String,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// The report with wall time zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn count(&self, key: &str) -> Option<u64> {
        self.counts.get(key).copied()
    }

    /// One line: claim, parameters, status.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{} [{}] {}", self.claim, params.join(" "), self.status.as_str())
    }
}

/// Accumulates a report; a check fails as soon as any failure is recorded.
pub(crate) struct Builder {
    started: Instant,
    report: VerificationReport,
    failed: bool,
    skipped: bool,
}

impl Builder {
    pub fn new(claim: &str) -> Builder {
        Builder {
            started: Instant::now(),
            report: VerificationReport {
                claim: claim.into(),
                params: Map::new(),
                status: Status::Pass,
                counts: BTreeMap::new(),
                witnesses: Vec::new(),
                notes: Vec::new(),
                seed: None,
                version: env!("CARGO_PKG_VERSION").into(),
                wall_time_ms: 0,
            },
            failed: false,
            skipped: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.report.params.insert(key.into(), value.into());
        self
    }

    pub fn seed(&mut self, seed: u64) -> &mut Self {
        self.report.seed = Some(seed);
        self
    }

    pub fn count(&mut self, key: &str, value: u64) -> &mut Self {
        self.report.counts.insert(key.into(), value);
        self
    }

    pub fn bump(&mut self, key: &str) {
        *self.report.counts.entry(key.into()).or_insert(0) += 1;
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.report.notes.push(text.into());
        self
    }

    pub fn witness(&mut self, w: Witness) -> &mut Self {
        self.report.witnesses.push(w);
        self
    }

    /// Records a failure together with its witness. Only the first few
    /// witnesses are kept.
    pub fn fail(&mut self, w: Witness) {
        self.failed = true;
        if self.report.witnesses.len() < 8 {
            self.report.witnesses.push(w);
        }
    }

    /// Fails unless `ok`, with a message witness.
    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(Witness::message(what()));
        }
    }

    pub fn skip(&mut self, why: impl Into<String>) {
        self.skipped = true;
        self.report.notes.push(why.into());
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.status = if self.failed {
            Status::Fail
        } else if self.skipped {
            Status::SkippedGuard
        } else {
            Status::Pass
        };
        self.report.wall_time_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}
