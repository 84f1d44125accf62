//! Report document emitted by the command-line front end.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::douglas::FactorizationResult;
use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::profile::OperatorProfile;
use crate::suite::{InequalityReport, Summary};

/// Top-level JSON document. Deliberately timestamp-free so identical
/// invocations emit byte-identical documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    /// SHA-256 of the input: file bytes for file-driven commands, the
    /// canonical flag description for sweeps.
    pub input_digest: String,
    /// Generating ensemble, present for sweep documents.
    pub ensemble: Option<EnsembleSpec>,
    pub profile: Option<OperatorProfile>,
    pub reports: Vec<InequalityReport>,
    pub factorizations: Vec<FactorizationResult>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(input_digest: String, reports: Vec<InequalityReport>) -> Self {
        let summary = Summary::tally(&reports);
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
            ensemble: None,
            profile: None,
            reports,
            factorizations: Vec::new(),
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: format!("invalid report document: {e}"),
        })
    }
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}
