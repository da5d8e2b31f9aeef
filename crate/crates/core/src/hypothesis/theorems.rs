use serde::{Deserialize, Serialize};

use super::conditions::{check_cmc_condition, check_condition};
use super::constants::{beta_bound, c_constant, epsilon_constant};
use super::profile::PrincipalCurvatureProfile;
use super::verdict::{Conclusion, Hypothesis, TheoremId, TheoremVerdict};
use super::HypothesisError;
use crate::exact::Num;
use crate::model::{chart, closed_form_summary, CurvatureSummary, ModelError, ModelSpec};
use crate::tensor::CurvatureReport;

/// Curvature data of the ambient manifold used by the theorems.
///
/// All entries are independent: nothing here assumes `γ ≤ a` or any
/// other relation between the bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmbientSummary {
    /// `m + 1`.
    pub dim: usize,
    /// Lower bound of the curvature operator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Num>,
    /// `[a, b]` with `a ≤ sec ≤ b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sec_bounds: Option<(Num, Num)>,
    /// Lower bound of `Ric(𝒩, 𝒩)` along the hypersurface.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci_normal_lb: Option<Num>,
    /// Uniform lower bound of the Ricci tensor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci_lb: Option<Num>,
    /// Uniform upper bound of the Ricci tensor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci_ub: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_lb: Option<Num>,
}

impl AmbientSummary {
    pub fn new(dim: usize) -> Self {
        AmbientSummary {
            dim,
            gamma: None,
            sec_bounds: None,
            ricci_normal_lb: None,
            ricci_lb: None,
            ricci_ub: None,
            scalar_lb: None,
        }
    }

    pub fn validate(&self) -> Result<(), HypothesisError> {
        if self.dim < 3 {
            return Err(HypothesisError::Inconsistent(format!(
                "ambient dimension {} leaves no hypersurface with m >= 2",
                self.dim
            )));
        }
        if let Some((a, b)) = &self.sec_bounds {
            if b.cmp_num(a).is_lt() {
                return Err(HypothesisError::Inconsistent(format!(
                    "sectional bounds [{a}, {b}] have a > b"
                )));
            }
        }
        if let (Some(lo), Some(hi)) = (&self.ricci_lb, &self.ricci_ub) {
            if hi.cmp_num(lo).is_lt() {
                return Err(HypothesisError::Inconsistent(format!(
                    "Ricci bounds [{lo}, {hi}] have lower > upper"
                )));
            }
        }
        Ok(())
    }

    /// Ambient data read off a closed-form summary. Curvature-operator
    /// bounds are only filled in when the spectrum is known exactly.
    pub fn from_summary(summary: &CurvatureSummary) -> Self {
        let sec_bounds = match (&summary.sec_min, &summary.sec_max) {
            (Some(a), Some(b)) => Some((Num::Exact(a.clone()), Num::Exact(b.clone()))),
            _ => None,
        };
        AmbientSummary {
            dim: summary.dim,
            gamma: summary.gamma.clone().map(Num::Exact),
            sec_bounds,
            ricci_normal_lb: None,
            ricci_lb: summary.ricci_min().cloned().map(Num::Exact),
            ricci_ub: summary.ricci_eigenvalues.last().map(|e| Num::Exact(e.value.clone())),
            scalar_lb: Some(Num::Exact(summary.scalar.clone())),
        }
    }

    /// Like [`AmbientSummary::from_summary`], estimating `γ` from the chart
    /// when the closed form has no exact spectrum. The model spaces are
    /// homogeneous, so the sample minimum is the global one up to rounding.
    pub fn from_model(spec: &ModelSpec, samples: usize, seed: u64) -> Result<Self, ModelError> {
        let summary = closed_form_summary(spec);
        let mut out = Self::from_summary(&summary);
        if out.gamma.is_none() {
            let metric = chart(spec);
            let mut gamma = f64::INFINITY;
            for p in metric.sample_points(samples.max(1), seed) {
                let rep = CurvatureReport::at(&metric, &p)?;
                if let Some(first) = rep.spectrum.first() {
                    gamma = gamma.min(*first);
                }
            }
            if gamma.is_finite() {
                out.gamma = Some(Num::Approx(gamma));
            }
        }
        Ok(out)
    }

    pub fn hypersurface_dim(&self) -> usize {
        self.dim - 1
    }

    /// Best available lower bound for `Ric(𝒩, 𝒩)`: the largest of the
    /// supplied normal bound, the uniform Ricci bound, `m·γ` and `m·a`.
    pub fn effective_ricci_normal_lb(&self) -> Option<Num> {
        [self.ricci_normal_lb.clone(), self.effective_ricci_lb()]
            .into_iter()
            .flatten()
            .reduce(Num::max)
    }

    /// Best available uniform Ricci lower bound: the supplied one, `m·γ`
    /// or `m·a`.
    pub fn effective_ricci_lb(&self) -> Option<Num> {
        let m = Num::int(self.hypersurface_dim() as i64);
        [
            self.ricci_lb.clone(),
            self.gamma.as_ref().map(|g| &m * g),
            self.sec_bounds.as_ref().map(|(a, _)| &m * a),
        ]
        .into_iter()
        .flatten()
        .reduce(Num::max)
    }
}

/// Caller-asserted properties, each carrying a provenance string.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertedFlags {
    /// Stable minimal, or strongly stable CMC, immersion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_totally_geodesic: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ric_normal_somewhere_positive: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinite_volume: Option<String>,
}

impl AssertedFlags {
    pub fn stable(provenance: impl Into<String>) -> Self {
        AssertedFlags {
            stable: Some(provenance.into()),
            ..Default::default()
        }
    }

    fn notes(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |name: &str, v: &Option<String>| {
            if let Some(p) = v {
                out.push(format!("asserted {name}: {p}"));
            }
        };
        push("stable", &self.stable);
        push("not totally geodesic", &self.not_totally_geodesic);
        push("Ric(N,N) somewhere positive", &self.ric_normal_somewhere_positive);
        push("infinite volume", &self.infinite_volume);
        out
    }
}

fn stability_hypothesis(flags: &AssertedFlags, cmc: bool) -> Hypothesis {
    let name = if cmc {
        "strongly stable CMC immersion (asserted)"
    } else {
        "stable minimal immersion (asserted)"
    };
    Hypothesis::flag(name, flags.stable.is_some())
}

fn dim_guard(m: usize, min: usize) -> Hypothesis {
    Hypothesis::inequality(format!("m >= {min}"), Num::int(m as i64 - min as i64), false)
}

fn check_dims(ambient: &AmbientSummary, profile: &PrincipalCurvatureProfile) -> Result<usize, HypothesisError> {
    ambient.validate()?;
    let m = profile.dim();
    if ambient.dim != m + 1 {
        return Err(HypothesisError::Inconsistent(format!(
            "profile has {m} curvatures but the ambient has dimension {} (expected {})",
            ambient.dim,
            m + 1
        )));
    }
    Ok(m)
}

fn degrees(p: usize, m: usize) -> Vec<usize> {
    let mut d = vec![p, m - p];
    d.dedup();
    d
}

/// Sectional pinching hypotheses `a > 0` and `b ≤ factor·a`.
fn pinching_hypotheses(ambient: &AmbientSummary, factor: Option<Num>, label: &str) -> Vec<Hypothesis> {
    match (&ambient.sec_bounds, factor) {
        (Some((a, b)), Some(f)) => vec![
            Hypothesis::inequality("sec lower bound a > 0", a.clone(), true),
            Hypothesis::inequality(format!("b <= {label}·a"), &(&f * a) - b, false),
        ],
        (None, _) => vec![Hypothesis::missing("sectional bounds [a, b]")],
        (Some(_), None) => vec![Hypothesis::flag(format!("{label} defined (needs m >= 6)"), false)],
    }
}

fn condition_hypothesis(
    profile: &PrincipalCurvatureProfile,
    p: usize,
) -> Result<Hypothesis, HypothesisError> {
    let check = check_condition(profile, p)?;
    let alpha: Vec<String> = check.worst_alpha.iter().map(|i| (i + 1).to_string()).collect();
    let name = if profile.is_minimal() {
        format!("|A|^2 - K_alpha^2 >= 0 for |alpha|={p} (worst alpha {{{}}})", alpha.join(","))
    } else {
        format!(
            "|A|^2 + K_alpha(H - K_alpha) >= 0 for |alpha|={p} (worst alpha {{{}}})",
            alpha.join(",")
        )
    };
    Ok(Hypothesis::inequality(name, check.margin, false))
}

/// Verdicts of the three Hodge criteria at degree `p` (and `m − p`).
///
/// Uses the CMC forms and identifiers when `H ≠ 0`. Degrees `0, 1, m−1, m`
/// produce a single `HodgeLowDegree` verdict.
pub fn hodge_verdicts(
    ambient: &AmbientSummary,
    profile: &PrincipalCurvatureProfile,
    p: usize,
    flags: &AssertedFlags,
) -> Result<Vec<TheoremVerdict>, HypothesisError> {
    let m = check_dims(ambient, profile)?;
    if p > m {
        return Err(HypothesisError::Degree { p, m, expected: "0 <= p <= m".into() });
    }
    let q = p.min(m - p);
    let cmc = !profile.is_minimal();
    let base_notes = {
        let mut n = flags.notes();
        if p != q {
            n.push(format!("degree {p} evaluated through its dual degree {q}"));
        }
        n
    };
    if q <= 1 {
        return Ok(vec![low_degree_verdict(q, m, flags, base_notes)]);
    }

    let stable = stability_hypothesis(flags, cmc);
    let condition = condition_hypothesis(profile, q)?;
    let mut out = Vec::new();

    // Point 1: curvature operator bounded below.
    {
        let mut hyps = vec![stable.clone(), dim_guard(m, 4)];
        let ric = ambient.effective_ricci_normal_lb();
        match (&ambient.gamma, &ric) {
            (Some(g), Some(r)) => hyps.push(Hypothesis::inequality(
                "p(m-p)·gamma + Ric(N,N) >= 0",
                &(&Num::int((q * (m - q)) as i64) * g) + r,
                false,
            )),
            (None, _) => hyps.push(Hypothesis::missing("curvature operator lower bound gamma")),
            (Some(_), None) => hyps.push(Hypothesis::missing("lower bound of Ric(N,N)")),
        }
        hyps.push(condition.clone());
        let mut notes = base_notes.clone();
        let auto_not_tg = !profile.norm_a2().is_zero();
        let auto_ric = ric.as_ref().is_some_and(Num::is_positive);
        if auto_not_tg {
            notes.push("not totally geodesic: |A|^2 > 0 at the supplied point".into());
        }
        if auto_ric {
            notes.push("Ric(N,N) positive: its lower bound is positive".into());
        }
        let vanishing = auto_not_tg
            || auto_ric
            || flags.not_totally_geodesic.is_some()
            || flags.ric_normal_somewhere_positive.is_some();
        let conclusion = if vanishing {
            Conclusion::Vanishing { degrees: degrees(q, m) }
        } else {
            Conclusion::ConstantLength { rank_bound: None }
        };
        let id = if cmc { TheoremId::CmcP1 } else { TheoremId::HodgeP1 };
        out.push(TheoremVerdict::evaluate(id, hyps, conclusion, notes));
    }

    // Point 2: sectional pinching with ε_{m,p}.
    {
        let mut hyps = vec![stable.clone(), dim_guard(m, 6)];
        let eps = epsilon_constant(m, q).ok().map(Num::Exact);
        hyps.extend(pinching_hypotheses(ambient, eps, "epsilon_{m,p}"));
        hyps.push(condition.clone());
        let id = if cmc { TheoremId::CmcP2 } else { TheoremId::HodgeP2 };
        out.push(TheoremVerdict::evaluate(
            id,
            hyps,
            Conclusion::Vanishing { degrees: degrees(q, m) },
            base_notes.clone(),
        ));
    }

    // Point 3: 2-forms with c_m.
    if q == 2 {
        let mut hyps = vec![stable, dim_guard(m, 6)];
        let c = c_constant(m).ok().map(Num::Exact);
        hyps.extend(pinching_hypotheses(ambient, c, "c_m"));
        hyps.push(condition);
        let id = if cmc { TheoremId::CmcP3 } else { TheoremId::HodgeP3 };
        out.push(TheoremVerdict::evaluate(
            id,
            hyps,
            Conclusion::Vanishing { degrees: degrees(2, m) },
            base_notes,
        ));
    }
    Ok(out)
}

fn low_degree_verdict(q: usize, m: usize, flags: &AssertedFlags, mut notes: Vec<String>) -> TheoremVerdict {
    if q == 0 {
        notes.push(
            "degree 0: L2-harmonic functions on a complete manifold are constant, \
             so they vanish exactly when the volume is infinite"
                .into(),
        );
        TheoremVerdict::evaluate(
            TheoremId::HodgeLowDegree,
            vec![Hypothesis::flag("infinite volume (asserted)", flags.infinite_volume.is_some())],
            Conclusion::Vanishing { degrees: degrees(0, m) },
            notes,
        )
    } else {
        notes.push(
            "degree 1: the subset condition always holds for |alpha| = 1, \
             but the vanishing criteria are stated for 2 <= p <= m/2"
                .into(),
        );
        TheoremVerdict::evaluate(
            TheoremId::HodgeLowDegree,
            vec![Hypothesis::flag("criterion available for degree 1", false)],
            Conclusion::NotApplicable,
            notes,
        )
    }
}

/// Vanishing from an upper bound on `|A|²` when `𝓡 ≥ γ ≥ 0` and `Ric ≥ b > 0`.
pub fn abound_verdict(
    ambient: &AmbientSummary,
    profile: &PrincipalCurvatureProfile,
    p: usize,
    flags: &AssertedFlags,
) -> Result<TheoremVerdict, HypothesisError> {
    let m = check_dims(ambient, profile)?;
    if p < 2 || p + 2 > m {
        return Err(HypothesisError::Degree { p, m, expected: "2 <= p <= m-2".into() });
    }
    let mut hyps = vec![
        stability_hypothesis(flags, false),
        dim_guard(m, 4),
        Hypothesis::flag("minimal (H = 0)", profile.is_minimal()),
    ];
    let ricci = ambient.effective_ricci_lb();
    match &ambient.gamma {
        Some(g) => hyps.push(Hypothesis::inequality("gamma >= 0", g.clone(), false)),
        None => hyps.push(Hypothesis::missing("curvature operator lower bound gamma")),
    }
    match &ricci {
        Some(b) => hyps.push(Hypothesis::inequality("Ricci lower bound b > 0", b.clone(), true)),
        None => hyps.push(Hypothesis::missing("Ricci lower bound b")),
    }
    if let (Some(g), Some(b)) = (&ambient.gamma, &ricci) {
        let beta = beta_bound(m, p, g, b)?;
        hyps.push(Hypothesis::inequality(
            format!("|A|^2 <= (gamma·p(m-p) + b)/(min(p,m-p) - 1) = {beta}"),
            beta - profile.norm_a2(),
            false,
        ));
    }
    Ok(TheoremVerdict::evaluate(
        TheoremId::Abound,
        hyps,
        Conclusion::Vanishing { degrees: degrees(p, m) },
        flags.notes(),
    ))
}

/// `s_induced = s_ambient + H² − |A|² − 2·Ric(𝒩,𝒩)`.
///
/// A pointwise identity: the inputs must come from the same immersion.
pub fn gauss_codazzi_scalar(s_ambient: &Num, profile: &PrincipalCurvatureProfile, ric_normal: &Num) -> Num {
    let h2 = profile.mean_curvature().square();
    s_ambient + &h2 - profile.norm_a2() - &Num::int(2) * ric_normal
}

/// `¼(s + H² + |A|²)`.
pub fn spinor_term(s_ambient_lb: &Num, profile: &PrincipalCurvatureProfile) -> Num {
    let sum = s_ambient_lb + &profile.mean_curvature().square() + profile.norm_a2();
    &sum / &Num::int(4)
}

/// Spinor rank `2^{⌊n/2⌋}`; `None` if it does not fit in 64 bits.
pub fn spinor_rank_bound(n: usize) -> Option<u64> {
    1_u64.checked_shl(u32::try_from(n / 2).ok()?)
}

/// Harmonic spinor verdict (minimal or CMC depending on `H`).
pub fn spinor_verdict(
    ambient: &AmbientSummary,
    profile: &PrincipalCurvatureProfile,
    flags: &AssertedFlags,
) -> Result<TheoremVerdict, HypothesisError> {
    let m = check_dims(ambient, profile)?;
    let cmc = !profile.is_minimal();
    let mut hyps = vec![stability_hypothesis(flags, cmc)];
    let mut notes = flags.notes();
    let mut vanishing = flags.infinite_volume.is_some();
    match &ambient.scalar_lb {
        Some(s) => {
            let h2 = profile.mean_curvature().square();
            let base = s + &h2;
            hyps.push(Hypothesis::inequality("s_g + H^2 >= 0", base.clone(), false));
            let term = spinor_term(s, profile);
            notes.push(format!("Lichnerowicz term 1/4(s_g + H^2 + |A|^2) = {term}"));
            if term.is_positive() {
                notes.push("term positive at the supplied point".into());
                vanishing = true;
            }
        }
        None => hyps.push(Hypothesis::missing("scalar curvature lower bound")),
    }
    let rank = spinor_rank_bound(m);
    notes.push(match rank {
        Some(r) => format!("spinor rank 2^{} = {r}", m / 2),
        None => format!("spinor rank 2^{} exceeds 64 bits", m / 2),
    });
    let conclusion = if vanishing {
        Conclusion::Vanishing { degrees: vec![] }
    } else {
        Conclusion::ConstantLength { rank_bound: rank }
    };
    let id = if cmc { TheoremId::CmcSpin } else { TheoremId::SpinVanishing };
    Ok(TheoremVerdict::evaluate(id, hyps, conclusion, notes))
}

/// Sign of `|A|² + Ric(𝒩,𝒩)` along the hypersurface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NullitySign {
    NonnegEverywhere,
    NonposEverywhere,
    Mixed,
}

/// Sign of `|A|² + Ric(𝒩,𝒩)` from bounds: nonnegative when the normal Ricci
/// lower bound is, nonpositive when `sup Ric(𝒩,𝒩) + sup |A|² ≤ 0`.
pub fn classify_nullity_sign(
    ric_normal_lb: Option<&Num>,
    ric_normal_ub: Option<&Num>,
    norm_a2_sup: Option<&Num>,
) -> NullitySign {
    if ric_normal_lb.is_some_and(Num::is_nonnegative) {
        return NullitySign::NonnegEverywhere;
    }
    if let (Some(ub), Some(a2)) = (ric_normal_ub, norm_a2_sup) {
        if !(ub + a2).is_positive() {
            return NullitySign::NonposEverywhere;
        }
    }
    NullitySign::Mixed
}

pub fn nullity_verdict(sign: NullitySign, flags: &AssertedFlags) -> TheoremVerdict {
    TheoremVerdict::evaluate(
        TheoremId::Nullity,
        vec![
            stability_hypothesis(flags, false),
            Hypothesis::flag(
                "|A|^2 + Ric(N,N) has a constant sign",
                sign != NullitySign::Mixed,
            ),
        ],
        Conclusion::NullityIn01,
        {
            let mut n = flags.notes();
            n.push(format!("sign classification: {sign:?}"));
            n
        },
    )
}

/// `p(m−p)γ + Ric(𝒩,𝒩) + |A|² + min_α K_α K_{⋆α}`.
pub fn weitzenbock_lower_bound(
    m: usize,
    p: usize,
    gamma: &Num,
    ric_normal_lb: &Num,
    profile: &PrincipalCurvatureProfile,
) -> Result<Num, HypothesisError> {
    if profile.dim() != m {
        return Err(HypothesisError::Inconsistent(format!(
            "profile has {} curvatures, expected {m}",
            profile.dim()
        )));
    }
    let ext = check_cmc_condition(profile, p)?.margin;
    Ok(&(&Num::int((p * (m - p)) as i64) * gamma) + ric_normal_lb + ext)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis::profile::preset;

    fn prof(s: &str) -> PrincipalCurvatureProfile {
        PrincipalCurvatureProfile::parse(s).unwrap()
    }

    fn stable() -> AssertedFlags {
        AssertedFlags::stable("test")
    }

    fn euclid(dim: usize) -> AmbientSummary {
        AmbientSummary::from_summary(&closed_form_summary(&ModelSpec::Euclidean(dim)))
    }

    #[test]
    fn bdgg_in_euclidean_space() {
        let ambient = euclid(9);
        let b = preset("bdgg:n=4").unwrap();
        for p in [2, 6] {
            let v = hodge_verdicts(&ambient, &b, p, &stable()).unwrap();
            assert_eq!(v[0].theorem_id, TheoremId::HodgeP1);
            assert_eq!(v[0].conclusion, Conclusion::Vanishing { degrees: vec![2, 6] });
            assert!(!v[1].applies());
        }
        let v3 = hodge_verdicts(&ambient, &b, 3, &stable()).unwrap();
        assert!(!v3[0].applies());
    }

    #[test]
    fn totally_geodesic_in_flat_space_gives_constant_length() {
        let v = hodge_verdicts(&euclid(7), &preset("totally-geodesic:m=6").unwrap(), 2, &stable())
            .unwrap();
        assert_eq!(v[0].conclusion, Conclusion::ConstantLength { rank_bound: None });
    }

    #[test]
    fn missing_stability_blocks() {
        let v = hodge_verdicts(&euclid(9), &preset("bdgg:n=4").unwrap(), 2, &AssertedFlags::default())
            .unwrap();
        assert!(v.iter().all(|v| !v.applies()));
    }

    #[test]
    fn pinching_passes_condition_fails() {
        let mut a = AmbientSummary::new(7);
        a.sec_bounds = Some((Num::int(1), Num::int(4)));
        let pr = prof("1,1,-2/3,-2/3,-2/3,0");
        let v = hodge_verdicts(&a, &pr, 2, &stable()).unwrap();
        let p3 = v.iter().find(|v| v.theorem_id == TheoremId::HodgeP3).unwrap();
        assert!(p3.hypothesis("b <= c_m").unwrap().pass);
        assert_eq!(p3.hypothesis("b <= c_m").unwrap().margin, Some(Num::ratio(9, 4)));
        assert_eq!(p3.conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(hodge_verdicts(&euclid(5), &prof("1,-1"), 1, &stable()).is_err());
    }

    #[test]
    fn abound_examples() {
        let s7 = AmbientSummary::from_summary(&closed_form_summary(&ModelSpec::parse("S7").unwrap()));
        let boundary = prof("2,-3/2,-1,1/2,0,0");
        assert_eq!(boundary.norm_a2(), Num::ratio(15, 2));
        let v = abound_verdict(&s7, &boundary, 3, &stable()).unwrap();
        assert!(v.applies());
        assert_eq!(v.hypotheses.last().unwrap().margin, Some(Num::zero()));
        let over = prof("2,-1,-1,1,-1,0");
        let v = abound_verdict(&s7, &over, 3, &stable()).unwrap();
        assert!(!v.applies());
        assert_eq!(v.hypotheses.last().unwrap().margin, Some(Num::ratio(-1, 2)));
        assert!(abound_verdict(&s7, &boundary, 1, &stable()).is_err());
    }

    #[test]
    fn spinor_examples() {
        let flat = euclid(4);
        let tg = preset("totally-geodesic:m=3").unwrap();
        let v = spinor_verdict(&flat, &tg, &stable()).unwrap();
        assert_eq!(v.conclusion, Conclusion::ConstantLength { rank_bound: Some(2) });
        let mut f = stable();
        f.infinite_volume = Some("minimal in flat space".into());
        let v = spinor_verdict(&flat, &tg, &f).unwrap();
        assert_eq!(v.conclusion, Conclusion::Vanishing { degrees: vec![] });
        let mut pos = AmbientSummary::new(4);
        pos.scalar_lb = Some(Num::ratio(1, 4));
        let v = spinor_verdict(&pos, &tg, &stable()).unwrap();
        assert_eq!(v.conclusion, Conclusion::Vanishing { degrees: vec![] });
        let mut neg = AmbientSummary::new(3);
        neg.scalar_lb = Some(Num::int(-5));
        let v = spinor_verdict(&neg, &prof("1,1"), &stable()).unwrap();
        assert_eq!(v.theorem_id, TheoremId::CmcSpin);
        assert!(!v.applies());
    }

    #[test]
    fn rank_parity() {
        assert_eq!(spinor_rank_bound(4), Some(4));
        assert_eq!(spinor_rank_bound(5), Some(4));
        assert_eq!(spinor_rank_bound(200), None);
    }

    #[test]
    fn nullity() {
        let s = classify_nullity_sign(Some(&Num::zero()), None, None);
        assert_eq!(nullity_verdict(s, &stable()).conclusion, Conclusion::NullityIn01);
        let s = classify_nullity_sign(Some(&Num::int(-3)), Some(&Num::int(-1)), Some(&Num::int(1)));
        assert_eq!(s, NullitySign::NonposEverywhere);
        let s = classify_nullity_sign(Some(&Num::int(-3)), Some(&Num::int(1)), Some(&Num::int(1)));
        assert_eq!(nullity_verdict(s, &stable()).conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn gauss_codazzi() {
        let tg = preset("totally-geodesic:m=4").unwrap();
        assert_eq!(gauss_codazzi_scalar(&Num::zero(), &tg, &Num::int(3)), Num::int(-6));
        let pr = prof("1,-1,2,-2");
        assert_eq!(gauss_codazzi_scalar(&Num::zero(), &pr, &Num::zero()), Num::int(-10));
    }

    #[test]
    fn weitzenbock_examples() {
        let pr = prof("1,1,-2/3,-2/3,-2/3");
        let b = weitzenbock_lower_bound(5, 2, &Num::zero(), &Num::zero(), &pr).unwrap();
        assert_eq!(b, Num::ratio(-2, 3));
        let tg = preset("totally-geodesic:m=6").unwrap();
        let b = weitzenbock_lower_bound(6, 2, &Num::int(1), &Num::int(6), &tg).unwrap();
        assert_eq!(b, Num::int(14));
    }
}
