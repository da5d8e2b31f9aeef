//! Ambient model spaces: closed-form curvature summaries and coordinate
//! charts for numeric cross-validation.
//!
//! Canonical text form: factors joined by `x`, parameters in parentheses,
//! e.g. `S3(r=1)xR2`, `Berger(n=3,delta=1.1)`, `CP2xR2`, `E4`.

mod chart;
mod spec;
mod summary;
mod verify;

pub use chart::{berger_frame, chart, BergerFrame, CHART_HALF_WIDTH};
pub use spec::ModelSpec;
pub use summary::{
    berger_operator_spectrum, berger_ricci, berger_scalar, berger_sectional_values,
    bivector_dim, closed_form_summary, collect_spectrum, product_spectrum, CurvatureSummary,
    Eigen, Spectrum,
};
pub use verify::{verify_model, NumericCheck, DEFAULT_SAMPLES, SPECTRUM_TOLERANCE};

use thiserror::Error;

use crate::tensor::TensorError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("parse error at byte {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },
    #[error("invalid model: {0}")]
    Invalid(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}
