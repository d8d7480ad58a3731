use std::fmt;

use combinatorics_core::{Partition, Tabloid};
use serde::{Deserialize, Serialize};

use crate::DarsError;

/// (P̄, Q̄, λ, N₀).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "TupleJson", try_from = "TupleJson")]
pub struct DarsTuple {
    pub pbar: Tabloid,
    pub qbar: Tabloid,
    pub lambda: Partition,
    pub n0: i64,
}

impl DarsTuple {
    pub fn new(pbar: Tabloid, qbar: Tabloid, lambda: Partition, n0: i64) -> Self {
        DarsTuple { pbar, qbar, lambda, n0 }
    }

    pub fn n(&self) -> usize {
        self.pbar.n()
    }

    /// Index of the affine permutation this tuple encodes: n(N₀ - 2) - |λ|.
    pub fn index(&self) -> i64 {
        self.n() as i64 * (self.n0 - 2) - self.lambda.size() as i64
    }
}

impl fmt::Display for DarsTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={} Q={} lambda=({}) N0={}", self.pbar, self.qbar, self.lambda, self.n0)
    }
}

#[derive(Serialize, Deserialize)]
struct TupleJson {
    p: String,
    q: String,
    lambda: Vec<usize>,
    n0: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<i64>,
}

impl From<DarsTuple> for TupleJson {
    fn from(t: DarsTuple) -> Self {
        TupleJson {
            p: t.pbar.to_string(),
            q: t.qbar.to_string(),
            lambda: t.lambda.parts().to_vec(),
            n0: t.n0,
            n: Some(t.n()),
            index: Some(t.index()),
        }
    }
}

impl TryFrom<TupleJson> for DarsTuple {
    type Error = DarsError;

    fn try_from(j: TupleJson) -> Result<Self, DarsError> {
        let t = DarsTuple {
            pbar: j.p.parse()?,
            qbar: j.q.parse()?,
            lambda: Partition::new(j.lambda)?,
            n0: j.n0,
        };
        if j.n.is_some_and(|n| n != t.n()) {
            return Err(DarsError::Json(format!("n = {} but the tabloids have {} entries", j.n.unwrap_or(0), t.n())));
        }
        if j.index.is_some_and(|i| i != t.index()) {
            return Err(DarsError::Json(format!("index {} disagrees with n(N0-2)-|lambda| = {}", j.index.unwrap_or(0), t.index())));
        }
        Ok(t)
    }
}
