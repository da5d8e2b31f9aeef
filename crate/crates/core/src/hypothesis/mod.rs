//! Exact evaluation of the vanishing criteria for stable minimal and
//! strongly stable CMC hypersurfaces.
//!
//! Everything is pointwise: a [`PrincipalCurvatureProfile`] is one point of
//! the hypersurface, and callers supply worst-case profiles when they want
//! a statement about the whole hypersurface.

mod berger;
mod conditions;
mod constants;
mod profile;
mod theorems;
mod verdict;

pub use berger::{figure1_data, BergerThresholds, Figure1Row, LabeledValue, FIGURE1_LABELS};
pub use conditions::{
    check_cmc_condition, check_condition, check_minimal_condition, extremes, zeropp_sufficient,
    ConditionCheck, Extremes, ZeroppDecision, ZeroppShortcut,
};
pub use constants::{
    beta_bound, berger_component_bound, c_constant, constants_table, ell, epsilon_constant,
    large_beta_dims, mu, pinched_operator_lb, sphere_beta, two_form_pinched_lb, ConstantRow,
    PinchingConstants,
};
pub use profile::{parse_profile_or_preset, preset, PrincipalCurvatureProfile};
pub use theorems::{
    abound_verdict, classify_nullity_sign, gauss_codazzi_scalar, hodge_verdicts, nullity_verdict,
    spinor_rank_bound, spinor_term, spinor_verdict, weitzenbock_lower_bound, AmbientSummary,
    AssertedFlags, NullitySign,
};
pub use verdict::{Conclusion, Hypothesis, TheoremId, TheoremVerdict};

use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypothesisError {
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("invalid index set: {0}")]
    Subset(String),
    #[error("profile is not minimal (H = {0}); use the CMC condition")]
    NotMinimal(String),
    #[error("degree p = {p} out of range for m = {m}: need {expected}")]
    Degree { p: usize, m: usize, expected: String },
    #[error("invalid pinching: {0}")]
    Pinching(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
