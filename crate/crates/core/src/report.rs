//! Verification report shared by every check in the harness.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one verification. `passed` holds exactly when no
/// counterexample was recorded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub worst_residual: f64,
    pub counterexample: Option<Value>,
}

impl VerificationReport {
    pub fn new(
        name: impl Into<String>,
        checks: u64,
        worst_residual: f64,
        counterexample: Option<Value>,
    ) -> Self {
        VerificationReport {
            name: name.into(),
            passed: counterexample.is_none(),
            checks,
            worst_residual: if worst_residual.is_finite() {
                worst_residual
            } else {
                0.0
            },
            counterexample,
        }
    }

    /// Folds several reports into one under a new name: checks add up, the
    /// worst residual is the largest, and the first counterexample wins.
    pub fn combine(name: impl Into<String>, parts: &[VerificationReport]) -> Self {
        Self::combine_with(name, parts, f64::max)
    }

    /// As [`combine`](Self::combine), choosing the worst residual with `pick`.
    pub fn combine_with(
        name: impl Into<String>,
        parts: &[VerificationReport],
        pick: fn(f64, f64) -> f64,
    ) -> Self {
        let checks = parts.iter().map(|r| r.checks).sum();
        let worst = parts
            .iter()
            .map(|r| r.worst_residual)
            .reduce(pick)
            .unwrap_or(0.0);
        let counterexample = parts.iter().find(|r| !r.passed).map(|r| {
            serde_json::json!({
                "part": r.name,
                "detail": r.counterexample.clone().unwrap_or(Value::Null),
            })
        });
        VerificationReport::new(name, checks, worst, counterexample)
    }
}
