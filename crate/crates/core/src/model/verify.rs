use serde::{Deserialize, Serialize};

use super::chart::chart;
use super::spec::ModelSpec;
use super::summary::{closed_form_summary, CurvatureSummary};
use super::ModelError;
use crate::exact::to_f64;
use crate::tensor::CurvatureReport;

pub const DEFAULT_SAMPLES: usize = 20;
/// Absolute agreement required between numeric and closed-form spectra.
pub const SPECTRUM_TOLERANCE: f64 = 1e-6;
/// Lower bound accepted for numeric-only spectra that should be nonnegative.
pub const NONNEG_TOLERANCE: f64 = 1e-8;

/// Chart-based numeric comparison against the closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericCheck {
    pub samples: usize,
    pub seed: u64,
    /// Largest `|numeric − closed form|` over sorted spectra; `None` when
    /// the closed form is numeric-only.
    pub max_spectrum_deviation: Option<f64>,
    pub max_ricci_deviation: f64,
    pub max_scalar_deviation: f64,
    pub min_numeric_eigenvalue: f64,
    pub max_symmetry_defect: f64,
    pub passed: bool,
}

fn max_sorted_deviation(numeric: &[f64], exact: &[f64]) -> f64 {
    if numeric.len() != exact.len() {
        return f64::INFINITY;
    }
    numeric
        .iter()
        .zip(exact)
        .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
}

/// Compare the chart curvature of `spec` with its closed-form summary at
/// `samples` seeded points.
pub fn verify_model(spec: &ModelSpec, samples: usize, seed: u64) -> Result<NumericCheck, ModelError> {
    let summary: CurvatureSummary = closed_form_summary(spec);
    let metric = chart(spec);
    let exact_spectrum: Option<Vec<f64>> = summary
        .curvature_operator_spectrum
        .expanded()
        .map(|v| v.iter().map(to_f64).collect());
    let exact_ricci: Vec<f64> = summary
        .ricci_eigenvalues
        .iter()
        .flat_map(|e| std::iter::repeat_n(to_f64(&e.value), e.multiplicity))
        .collect();
    let exact_scalar = to_f64(&summary.scalar);

    let mut spec_dev = exact_spectrum.as_ref().map(|_| 0.0_f64);
    let mut ricci_dev = 0.0_f64;
    let mut scalar_dev = 0.0_f64;
    let mut min_eig = f64::INFINITY;
    let mut sym = 0.0_f64;
    for p in metric.sample_points(samples, seed) {
        let rep = CurvatureReport::at(&metric, &p)?;
        sym = sym.max(rep.riemann.symmetry_defect());
        if let Some(first) = rep.spectrum.first() {
            min_eig = min_eig.min(*first);
        }
        if let (Some(dev), Some(exact)) = (spec_dev.as_mut(), exact_spectrum.as_ref()) {
            *dev = dev.max(max_sorted_deviation(&rep.spectrum, exact));
        }
        ricci_dev = ricci_dev.max(max_sorted_deviation(&rep.ricci_eigenvalues()?, &exact_ricci));
        scalar_dev = scalar_dev.max((rep.scalar - exact_scalar).abs());
    }
    let passed = match spec_dev {
        Some(d) => d <= SPECTRUM_TOLERANCE,
        None => min_eig >= -NONNEG_TOLERANCE,
    } && ricci_dev <= SPECTRUM_TOLERANCE
        && scalar_dev <= SPECTRUM_TOLERANCE;
    Ok(NumericCheck {
        samples,
        seed,
        max_spectrum_deviation: spec_dev,
        max_ricci_deviation: ricci_dev,
        max_scalar_deviation: scalar_dev,
        min_numeric_eigenvalue: min_eig,
        max_symmetry_defect: sym,
        passed,
    })
}
