//! Residual reports returned by the verification entry points.

use serde::Serialize;

/// One checked identity, labeled by the diagram element it belongs to.
#[derive(Debug, Clone, Serialize)]
pub struct ReportItem {
    pub label: String,
    pub residual: f64,
}

/// A collection of residuals with a pass threshold.
///
/// Verifiers return reports rather than errors: a failed check is data, not
/// an exceptional state.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub items: Vec<ReportItem>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(tolerance: f64) -> Self {
        ResidualReport {
            items: Vec::new(),
            max_residual: 0.0,
            tolerance,
            pass: true,
        }
    }

    pub fn push(&mut self, label: impl Into<String>, residual: f64) {
        let residual = if residual.is_finite() {
            residual
        } else {
            f64::INFINITY
        };
        self.max_residual = self.max_residual.max(residual);
        self.pass = self.max_residual <= self.tolerance;
        self.items.push(ReportItem {
            label: label.into(),
            residual,
        });
    }

    pub fn merge(&mut self, other: ResidualReport) {
        for item in other.items {
            self.push(item.label, item.residual);
        }
    }

    /// Largest residual among items whose label starts with `prefix`.
    pub fn max_for(&self, prefix: &str) -> f64 {
        self.items
            .iter()
            .filter(|i| i.label.starts_with(prefix))
            .map(|i| i.residual)
            .fold(0.0, f64::max)
    }
}
