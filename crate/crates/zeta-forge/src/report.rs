//! Grid verification reports shared by the series and quadrature labs.

use serde_json::{json, Value};

/// Residuals of some identity over a grid of evaluation points.
///
/// For ε-sweep checks the "points" are the ε values; for everything else they
/// are grid abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct GridReport {
    points: Vec<f64>,
    residuals: Vec<f64>,
}

impl GridReport {
    /// Panics if the two lists disagree in length.
    pub fn new(points: Vec<f64>, residuals: Vec<f64>) -> GridReport {
        assert_eq!(points.len(), residuals.len(), "one residual per point");
        GridReport { points, residuals }
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Largest |residual|; 0 for an empty report.
    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    pub fn passes(&self, threshold: f64) -> bool {
        self.max_abs_residual() <= threshold
    }

    /// `{"points": [...], "residuals": [...], "max_abs_residual": ...}`
    pub fn to_json(&self) -> Value {
        json!({
            "points": self.points,
            "residuals": self.residuals,
            "max_abs_residual": self.max_abs_residual(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_abs_takes_magnitudes() {
        let r = GridReport::new(vec![0.1, 0.2, 0.3], vec![1e-3, -2e-3, 5e-4]);
        assert_eq!(r.max_abs_residual(), 2e-3);
        assert!(r.passes(2e-3));
        assert!(!r.passes(1.9e-3));
        let empty = GridReport::new(vec![], vec![]);
        assert_eq!(empty.max_abs_residual(), 0.0);
    }

    #[test]
    fn json_shape() {
        let r = GridReport::new(vec![0.5], vec![-1e-9]);
        let v = r.to_json();
        assert_eq!(v["points"], json!([0.5]));
        assert_eq!(v["residuals"], json!([-1e-9]));
        assert_eq!(v["max_abs_residual"], json!(1e-9));
    }
}
