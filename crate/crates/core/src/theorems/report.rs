use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::RingMatrix;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisViolation,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub v: String,
    pub theorem: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub witness: Option<Value>,
    pub counts: BTreeMap<String, u64>,
    #[serde(default)]
    pub data: Option<Value>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(theorem: &str, params: Map<String, Value>) -> VerificationReport {
        VerificationReport {
            v: SCHEMA_VERSION.to_string(),
            theorem: theorem.to_string(),
            params,
            status: Status::Pass,
            witness: None,
            counts: BTreeMap::new(),
            data: None,
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn count(mut self, key: &str, value: u64) -> Self {
        self.counts.insert(key.to_string(), value);
        self
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn fail(mut self, witness: Value) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn hypothesis_violation(mut self, err: &Error) -> Self {
        self.status = Status::HypothesisViolation;
        self.witness = Some(json!({ "reason": err.to_string() }));
        self
    }

    /// Fails with the first nonzero entry of `m`, if any.
    pub fn expect_zero(self, m: &RingMatrix) -> Self {
        match m.first_nonzero() {
            None => self,
            Some(((i, j), v)) => self.fail(json!({ "entry": [i + 1, j + 1], "value": v.to_string() })),
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// The report with `elapsed_ms` cleared, for reproducibility comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }
}

/// Settles a suite body: hypothesis errors become `hypothesis_violation`,
/// any other error a failure carrying the message.
pub(crate) fn finish(r: Result<VerificationReport>, fallback: VerificationReport, start: Instant) -> VerificationReport {
    match r {
        Ok(r) => r.timed(start),
        Err(e) if e.is_hypothesis_violation() => fallback.hypothesis_violation(&e).timed(start),
        Err(e) => fallback.fail(json!({ "error": e.to_string() })).timed(start),
    }
}

/// Builds a parameter object from `(name, value)` pairs.
pub fn params<I, K, V>(pairs: I) -> Map<String, Value>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: Into<Value>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v.into())).collect()
}
