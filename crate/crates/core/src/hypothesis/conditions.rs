//! The pointwise subset conditions on principal curvatures.
//!
//! Both conditions minimise a function of `K_α` over all `|α| = p`. The
//! achievable `K_α` values lie between the sum of the `p` smallest and the
//! sum of the `p` largest curvatures, and the functions involved are concave
//! in `K`, so only those two subsets need to be examined.

use serde::{Deserialize, Serialize};

use super::profile::{num_eq, PrincipalCurvatureProfile};
use super::HypothesisError;
use crate::exact::Num;

/// Outcome of a subset condition at one degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub p: usize,
    pub holds: bool,
    /// Minimising subset, 0-based, ascending.
    pub worst_alpha: Vec<usize>,
    pub margin: Num,
}

/// Subsets of size `p` realising the smallest and largest `K_α`.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremes {
    pub min_alpha: Vec<usize>,
    pub k_min: Num,
    pub max_alpha: Vec<usize>,
    pub k_max: Num,
}

fn check_degree(profile: &PrincipalCurvatureProfile, p: usize) -> Result<(), HypothesisError> {
    let m = profile.dim();
    if p == 0 || p >= m {
        return Err(HypothesisError::Degree { p, m, expected: "1 <= p <= m-1".into() });
    }
    Ok(())
}

/// Sorted-extreme subsets of size `p`.
pub fn extremes(profile: &PrincipalCurvatureProfile, p: usize) -> Result<Extremes, HypothesisError> {
    check_degree(profile, p)?;
    let k = profile.k();
    let mut order: Vec<usize> = (0..k.len()).collect();
    order.sort_by(|&a, &b| k[a].cmp_num(&k[b]).then(a.cmp(&b)));
    let mut min_alpha = order[..p].to_vec();
    let mut max_alpha = order[order.len() - p..].to_vec();
    min_alpha.sort_unstable();
    max_alpha.sort_unstable();
    Ok(Extremes {
        k_min: profile.k_alpha(&min_alpha)?,
        k_max: profile.k_alpha(&max_alpha)?,
        min_alpha,
        max_alpha,
    })
}

fn cmc_core(profile: &PrincipalCurvatureProfile, p: usize) -> Result<ConditionCheck, HypothesisError> {
    let ext = extremes(profile, p)?;
    let h = profile.mean_curvature();
    let q = |kk: &Num| kk * &(&h - kk);
    let (q_max, q_min) = (q(&ext.k_max), q(&ext.k_min));
    let (worst_alpha, qmin) = if q_min.cmp_num(&q_max).is_lt() {
        (ext.min_alpha, q_min)
    } else {
        (ext.max_alpha, q_max)
    };
    let margin = profile.norm_a2() + qmin;
    Ok(ConditionCheck {
        p,
        holds: margin.is_nonnegative(),
        worst_alpha,
        margin,
    })
}

/// `|A|² − K_α² ≥ 0` for every `|α| = p`, on a minimal profile.
pub fn check_minimal_condition(
    profile: &PrincipalCurvatureProfile,
    p: usize,
) -> Result<ConditionCheck, HypothesisError> {
    if !profile.is_minimal() {
        return Err(HypothesisError::NotMinimal(profile.mean_curvature().to_string()));
    }
    cmc_core(profile, p)
}

/// `|A|² + K_α(H − K_α) ≥ 0` for every `|α| = p`.
pub fn check_cmc_condition(
    profile: &PrincipalCurvatureProfile,
    p: usize,
) -> Result<ConditionCheck, HypothesisError> {
    cmc_core(profile, p)
}

/// The condition appropriate to the profile: minimal form when `H = 0`.
pub fn check_condition(
    profile: &PrincipalCurvatureProfile,
    p: usize,
) -> Result<ConditionCheck, HypothesisError> {
    if profile.is_minimal() {
        check_minimal_condition(profile, p)
    } else {
        check_cmc_condition(profile, p)
    }
}

/// Structural shortcuts that guarantee the minimal condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ZeroppShortcut {
    /// At most four nonzero curvatures: holds for every p.
    FourNonzero,
    /// Exactly `±k`, each with multiplicity `l > 2`: holds for `p² ≤ 2l`.
    TwoOppositeBlocks { l: usize, k: Num },
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroppDecision {
    pub p: usize,
    pub shortcut: ZeroppShortcut,
    /// Whether the shortcut settles degree `p`.
    pub applies: bool,
    /// Guaranteed lower bound on the condition margin, when known.
    pub margin_lower_bound: Option<Num>,
}

impl ZeroppShortcut {
    pub fn applies_to(&self, p: usize) -> bool {
        match self {
            ZeroppShortcut::FourNonzero => true,
            ZeroppShortcut::TwoOppositeBlocks { l, .. } => p * p <= 2 * l,
            ZeroppShortcut::None => false,
        }
    }
}

/// Classify a minimal profile and report whether a shortcut covers `p`.
pub fn zeropp_sufficient(
    profile: &PrincipalCurvatureProfile,
    p: usize,
) -> Result<ZeroppDecision, HypothesisError> {
    if !profile.is_minimal() {
        return Err(HypothesisError::NotMinimal(profile.mean_curvature().to_string()));
    }
    check_degree(profile, p)?;
    let nonzero: Vec<&Num> = profile.k().iter().filter(|x| !x.is_zero()).collect();
    let shortcut = if nonzero.len() <= 4 {
        ZeroppShortcut::FourNonzero
    } else {
        let k = nonzero[0].abs();
        let pos = nonzero.iter().filter(|x| num_eq(x, &k)).count();
        let neg = nonzero.iter().filter(|x| num_eq(x, &-k.clone())).count();
        if pos == neg && pos + neg == nonzero.len() {
            ZeroppShortcut::TwoOppositeBlocks { l: pos, k }
        } else {
            ZeroppShortcut::None
        }
    };
    let applies = shortcut.applies_to(p);
    let margin_lower_bound = match (&shortcut, applies) {
        (ZeroppShortcut::TwoOppositeBlocks { l, k }, true) => {
            let slack = Num::int(2 * *l as i64) - Num::int((p * p) as i64);
            Some(slack * k.square())
        }
        _ => None,
    };
    Ok(ZeroppDecision { p, shortcut, applies, margin_lower_bound })
}
