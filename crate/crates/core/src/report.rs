//! Machine-readable run reports. See `docs/report.md`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certificate::{Certificate, Verdict};
use crate::circle::{Chord, Model};
use crate::error::{Error, Result};
use crate::lamination::Lamination;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReport {
    pub index: usize,
    pub check: String,
    /// Laminations this check stored, by name.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stored: Vec<String>,
    pub certificate: Certificate,
    #[serde(default)]
    pub counts: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub proven: usize,
    pub refuted: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub total_ms: f64,
    pub per_check_ms: Vec<f64>,
}

/// A lamination as stored in a report or given to `render`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaminationDoc {
    pub model: Model,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    pub leaves: Vec<Chord>,
}

impl From<&Lamination> for LaminationDoc {
    fn from(l: &Lamination) -> Self {
        LaminationDoc { model: l.model(), depth: l.depth(), note: l.note().to_owned(), leaves: l.leaves().to_vec() }
    }
}

impl LaminationDoc {
    /// Rebuilds the lamination, rejecting crossing leaves.
    pub fn to_lamination(&self) -> Result<Lamination> {
        let mut l = Lamination::new(self.model, self.leaves.clone(), self.note.clone())?.expect_unlinked()?;
        if let Some(d) = self.depth {
            l.set_depth(d);
        }
        Ok(l)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub version: u32,
    pub scenario: String,
    pub summary: Summary,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub laminations: BTreeMap<String, LaminationDoc>,
    pub timings: Timings,
}

impl Report {
    pub fn new(
        scenario: String,
        checks: Vec<CheckReport>,
        laminations: BTreeMap<String, LaminationDoc>,
        timings: Timings,
    ) -> Self {
        let mut summary = Summary { proven: 0, refuted: 0, unknown: 0 };
        for c in &checks {
            match c.certificate.verdict {
                Verdict::Proven => summary.proven += 1,
                Verdict::Refuted { .. } => summary.refuted += 1,
                Verdict::UnknownAtDepth { .. } => summary.unknown += 1,
            }
        }
        Report { version: REPORT_VERSION, scenario, summary, checks, laminations, timings }
    }

    /// 0 when everything is proven, 1 when anything is refuted, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.refuted > 0 {
            1
        } else if self.summary.unknown > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timings; identical runs give identical bodies.
    pub fn body(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timings");
        v
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if r.version != REPORT_VERSION {
            return Err(Error::Parse(format!("unsupported report version {}", r.version)));
        }
        Ok(r)
    }

    /// Re-checks every refutation witness with the circle predicates.
    pub fn revalidate(&self) -> Result<bool> {
        for c in &self.checks {
            if let Some(w) = c.certificate.witness() {
                if !w.validate()? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
