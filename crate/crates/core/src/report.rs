//! Serialized per-semigroup report used by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationReport};
use crate::semigroup::NumericalSemigroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    /// Generators exactly as given, before minimalization.
    pub input: Vec<i64>,
    #[serde(flatten)]
    pub report: ClassificationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl ReportDocument {
    pub fn new(input: Vec<i64>, report: ClassificationReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            input,
            report,
            timing_us: None,
        }
    }

    pub fn for_semigroup(h: &NumericalSemigroup) -> Self {
        Self::new(h.min_gens().to_vec(), classify(h))
    }
}
