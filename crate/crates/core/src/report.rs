//! Shared reporting type for parameter inequalities: every check yields a
//! named record stating whether it applied, whether it held, the numbers it
//! was instantiated with, and the margin.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Outcome of one named inequality check.
///
/// `slack` is the signed margin: non-negative exactly when the inequality
/// holds (zero = tight). Checks whose hypotheses are not met report
/// `applicable: false` with no slack and vacuously `holds: true`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub holds: bool,
    pub applicable: bool,
    /// Instantiated quantities, keyed by symbol name (deterministic order).
    pub witness: BTreeMap<String, f64>,
    /// Signed margin; `None` when not applicable.
    pub slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl InequalityReport {
    /// A check that ran: holds exactly when `slack >= 0`.
    pub fn evaluated(name: &str, slack: f64, witness: BTreeMap<String, f64>) -> Self {
        Self {
            name: name.to_string(),
            holds: slack >= 0.0,
            applicable: true,
            witness,
            slack: Some(slack),
            note: None,
        }
    }

    /// A check whose hypotheses are not met by this input.
    pub fn not_applicable(name: &str, note: &str) -> Self {
        Self {
            name: name.to_string(),
            holds: true,
            applicable: false,
            witness: BTreeMap::new(),
            slack: None,
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// Convenience builder for witness maps.
pub fn witness(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}
