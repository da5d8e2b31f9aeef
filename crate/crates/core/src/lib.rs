//! Curvature computation and exact hypothesis checking for vanishing
//! theorems on stable minimal and strongly stable CMC hypersurfaces.
//!
//! * [`tensor`] computes Christoffel symbols, the Riemann tensor, Ricci and
//!   scalar curvature and the curvature operator from a metric in
//!   coordinates.
//! * [`model`] holds closed-form curvature data and coordinate charts for
//!   Euclidean spaces, round and Berger spheres, complex projective spaces
//!   and their products.
//! * [`hypothesis`] evaluates theorem hypotheses, pinching constants and
//!   threshold tables in exact rational arithmetic.
//! * [`report`] assembles requests and deterministic report documents.

pub mod dual;
pub mod exact;
pub mod hypothesis;
pub mod linalg;
pub mod model;
pub mod report;
pub mod tensor;

pub use exact::{Num, Rational};
pub use hypothesis::{
    AmbientSummary, Conclusion, PrincipalCurvatureProfile, TheoremId, TheoremVerdict,
};
pub use model::{CurvatureSummary, ModelSpec};
pub use report::{AnalysisRequest, ReportDocument};
pub use tensor::{ChartPoint, CurvatureReport, MetricField, RiemannTensor};
