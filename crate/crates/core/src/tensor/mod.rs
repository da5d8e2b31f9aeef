//! Curvature of a metric given in coordinates.
//!
//! Derivatives of the metric come from nested dual numbers; everything else
//! is plain `f64` linear algebra at a single point.

mod curvature;
mod metric;

pub use curvature::{
    bivector_basis, christoffel, curvature_operator, ricci_and_scalar, riemann, sectional,
    Christoffel, CurvatureOperatorMatrix, CurvatureReport, Frame, RiemannTensor,
};
pub use metric::{BoxDomain, ChartPoint, MetricComponents, MetricField, MetricJet, MAX_CONDITION};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("point {0:?} lies outside the chart domain")]
    OutsideDomain(Vec<f64>),
    #[error("point belongs to chart `{got}`, expected `{expected}`")]
    WrongChart { expected: String, got: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("metric matrix is not symmetric (relative asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("metric matrix is not positive definite (smallest eigenvalue {0:e})")]
    NotPositiveDefinite(f64),
    #[error("metric matrix is degenerate (condition number {condition:e})")]
    Degenerate { condition: f64 },
    #[error("vectors span a degenerate plane (Gram determinant {0:e})")]
    DegeneratePlane(f64),
    #[error("Gram–Schmidt failed to build an orthonormal frame")]
    FrameConstruction,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
