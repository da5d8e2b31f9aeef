//! Analysis requests and deterministic report documents.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{render, to_f64, Num, Rational};
use crate::hypothesis::{
    abound_verdict, c_constant, classify_nullity_sign, epsilon_constant, hodge_verdicts,
    nullity_verdict, parse_profile_or_preset, sphere_beta, spinor_verdict, AmbientSummary,
    AssertedFlags, BergerThresholds, ConstantRow, Figure1Row, HypothesisError,
    PrincipalCurvatureProfile, TheoremVerdict,
};
use crate::model::{closed_form_summary, CurvatureSummary, ModelError, ModelSpec, DEFAULT_SAMPLES};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error("inconsistent request: {0}")]
    Inconsistent(String),
    #[error("serialization failed: {0}")]
    Serialize(String),
}

/// Where the ambient curvature data comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum AmbientSource {
    Model(ModelSpec),
    Manual(AmbientSummary),
}

/// An explicit profile or a named preset such as `bdgg:n=4`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileSource {
    Explicit(PrincipalCurvatureProfile),
    Preset(String),
}

impl ProfileSource {
    pub fn resolve(&self) -> Result<PrincipalCurvatureProfile, HypothesisError> {
        match self {
            ProfileSource::Explicit(p) => Ok(p.clone()),
            ProfileSource::Preset(name) => parse_profile_or_preset(name),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRequest {
    pub ambient: AmbientSource,
    pub profile: ProfileSource,
    /// Degrees to evaluate; empty means every degree `0..=m`.
    #[serde(default)]
    pub degrees: Vec<usize>,
    #[serde(default)]
    pub flags: AssertedFlags,
    #[serde(default)]
    pub format: OutputFormat,
    /// Chart samples used to estimate `γ` when no exact spectrum exists.
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

/// One verdict tagged with the degree it was evaluated at.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub verdict: TheoremVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedConstant {
    pub name: String,
    #[serde(with = "crate::exact::rational_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub request: AnalysisRequest,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<CurvatureSummary>,
    pub ambient: AmbientSummary,
    pub profile: PrincipalCurvatureProfile,
    pub verdicts: Vec<VerdictEntry>,
    pub constants: Vec<NamedConstant>,
    pub tool_version: String,
    pub seed: u64,
}

fn relevant_constants(m: usize, degrees: &[usize]) -> Vec<NamedConstant> {
    let mut out = Vec::new();
    let mut ps: Vec<usize> = degrees.iter().map(|&p| p.min(m - p)).filter(|&q| q >= 2).collect();
    ps.sort_unstable();
    ps.dedup();
    for &q in &ps {
        if let Ok(e) = epsilon_constant(m, q) {
            out.push(NamedConstant { name: format!("epsilon_{{{m},{q}}}"), value: e });
        }
    }
    if let Ok(c) = c_constant(m) {
        out.push(NamedConstant { name: format!("c_{m}"), value: c });
    }
    for &q in &ps {
        if let Ok(b) = sphere_beta(q, m) {
            out.push(NamedConstant { name: format!("beta({q},{m})"), value: b });
        }
    }
    out
}

/// Run every applicable criterion for the request.
pub fn analyze(request: &AnalysisRequest) -> Result<ReportDocument, ReportError> {
    let profile = request.profile.resolve()?;
    let (ambient, summary) = match &request.ambient {
        AmbientSource::Model(spec) => {
            spec.validate()?;
            (
                AmbientSummary::from_model(spec, request.samples, request.seed)?,
                Some(closed_form_summary(spec)),
            )
        }
        AmbientSource::Manual(a) => {
            a.validate()?;
            (a.clone(), None)
        }
    };
    let m = profile.dim();
    if ambient.dim != m + 1 {
        return Err(ReportError::Inconsistent(format!(
            "profile has {m} principal curvatures but the ambient has dimension {}; expected {}",
            ambient.dim,
            m + 1
        )));
    }
    let degrees: Vec<usize> = if request.degrees.is_empty() {
        (0..=m).collect()
    } else {
        request.degrees.clone()
    };
    if let Some(&bad) = degrees.iter().find(|&&p| p > m) {
        return Err(ReportError::Inconsistent(format!("degree {bad} outside [0, {m}]")));
    }

    let flags = &request.flags;
    let mut verdicts = vec![VerdictEntry { degree: None, verdict: spinor_verdict(&ambient, &profile, flags)? }];
    let sign = classify_nullity_sign(
        ambient.effective_ricci_normal_lb().as_ref(),
        ambient.ricci_ub.as_ref(),
        Some(&profile.norm_a2()),
    );
    verdicts.push(VerdictEntry { degree: None, verdict: nullity_verdict(sign, flags) });
    for &p in &degrees {
        for v in hodge_verdicts(&ambient, &profile, p, flags)? {
            verdicts.push(VerdictEntry { degree: Some(p), verdict: v });
        }
        if p >= 2 && p + 2 <= m {
            verdicts.push(VerdictEntry {
                degree: Some(p),
                verdict: abound_verdict(&ambient, &profile, p, flags)?,
            });
        }
    }
    if let AmbientSource::Model(ModelSpec::BergerSphere { n, delta }) = &request.ambient {
        let t = BergerThresholds::derive(*n)?;
        let pr = (profile.is_minimal() && profile.dim() == 2 * n).then_some(&profile);
        for v in t.verdicts(delta, pr, flags)? {
            verdicts.push(VerdictEntry { degree: None, verdict: v });
        }
    }

    Ok(ReportDocument {
        request: request.clone(),
        summary,
        ambient,
        constants: relevant_constants(m, &degrees),
        profile,
        verdicts,
        tool_version: TOOL_VERSION.to_string(),
        seed: request.seed,
    })
}

impl ReportDocument {
    pub fn to_json(&self) -> Result<String, ReportError> {
        serde_json::to_string_pretty(self).map_err(|e| ReportError::Serialize(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::Serialize(e.to_string()))
    }

    /// One row per verdict.
    pub fn to_csv(&self) -> Result<String, ReportError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let ser = |e: csv::Error| ReportError::Serialize(e.to_string());
        w.write_record(["theorem_id", "degree", "conclusion", "failed_hypotheses", "min_margin"])
            .map_err(ser)?;
        for e in &self.verdicts {
            let v = &e.verdict;
            let failed: Vec<&str> =
                v.hypotheses.iter().filter(|h| !h.pass).map(|h| h.name.as_str()).collect();
            let min_margin = v
                .hypotheses
                .iter()
                .filter_map(|h| h.margin.clone())
                .reduce(Num::min)
                .map(|m| m.to_string())
                .unwrap_or_default();
            w.write_record([
                v.theorem_id.to_string(),
                e.degree.map(|d| d.to_string()).unwrap_or_default(),
                conclusion_text(&v.conclusion),
                failed.join("; "),
                min_margin,
            ])
            .map_err(ser)?;
        }
        let bytes = w.into_inner().map_err(|e| ReportError::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| ReportError::Serialize(e.to_string()))
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let ambient = match &self.request.ambient {
            AmbientSource::Model(spec) => spec.to_string(),
            AmbientSource::Manual(_) => "manual summary".to_string(),
        };
        let _ = writeln!(s, "# Analysis report\n");
        let _ = writeln!(s, "- ambient: `{ambient}` (dimension {})", self.ambient.dim);
        let _ = writeln!(s, "- profile: `{}`", self.profile);
        let _ = writeln!(s, "- H = {}, |A|^2 = {}", self.profile.mean_curvature(), self.profile.norm_a2());
        let _ = writeln!(s, "- tool version {}, seed {}\n", self.tool_version, self.seed);
        if !self.constants.is_empty() {
            let _ = writeln!(s, "## Constants\n\n| name | value |\n|---|---|");
            for c in &self.constants {
                let _ = writeln!(s, "| {} | {} |", c.name, render(&c.value));
            }
            s.push('\n');
        }
        let _ = writeln!(s, "## Verdicts\n");
        for e in &self.verdicts {
            let v = &e.verdict;
            let deg = e.degree.map(|d| format!(" (p = {d})")).unwrap_or_default();
            let _ = writeln!(s, "### {}{deg}: {}\n", v.theorem_id, conclusion_text(&v.conclusion));
            let _ = writeln!(s, "| hypothesis | pass | margin | strict |\n|---|---|---|---|");
            for h in &v.hypotheses {
                let margin = h.margin.as_ref().map(|m| m.to_string()).unwrap_or_else(|| "-".into());
                let _ = writeln!(s, "| {} | {} | {} | {} |", h.name, h.pass, margin, h.strict);
            }
            for n in &v.notes {
                let _ = writeln!(s, "\n> {n}");
            }
            s.push('\n');
        }
        s
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, ReportError> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Md => Ok(self.to_markdown()),
        }
    }
}

pub fn conclusion_text(c: &crate::hypothesis::Conclusion) -> String {
    use crate::hypothesis::Conclusion::*;
    match c {
        ConstantLength { rank_bound: Some(r) } => format!("ConstantLength (rank <= {r})"),
        ConstantLength { rank_bound: None } => "ConstantLength".into(),
        Vanishing { degrees } if degrees.is_empty() => "Vanishing (spinors)".into(),
        Vanishing { degrees } => {
            let d: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
            format!("Vanishing (p = {})", d.join(", "))
        }
        NullityIn01 => "NullityIn01".into(),
        NotApplicable => "NotApplicable".into(),
    }
}

/// Constants table in the requested format.
pub fn render_constants(rows: &[ConstantRow], format: OutputFormat) -> Result<String, ReportError> {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(rows).map_err(|e| ReportError::Serialize(e.to_string()))
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let ser = |e: csv::Error| ReportError::Serialize(e.to_string());
            w.write_record(["m", "p", "epsilon", "c", "sphere_beta"]).map_err(ser)?;
            for r in rows {
                w.write_record([
                    r.m.to_string(),
                    r.p.to_string(),
                    render(&r.epsilon),
                    render(&r.c),
                    render(&r.sphere_beta),
                ])
                .map_err(ser)?;
            }
            let bytes = w.into_inner().map_err(|e| ReportError::Serialize(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| ReportError::Serialize(e.to_string()))
        }
        OutputFormat::Md => {
            let mut s = String::from("| m | p | epsilon_{m,p} | c_m | beta(p,m) |\n|---|---|---|---|---|\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    r.m,
                    r.p,
                    render(&r.epsilon),
                    render(&r.c),
                    render(&r.sphere_beta)
                );
            }
            Ok(s)
        }
    }
}

/// Figure data, one line per (n, value), in sorted order within each n.
pub fn render_figure1(rows: &[Figure1Row], format: OutputFormat) -> Result<String, ReportError> {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(rows).map_err(|e| ReportError::Serialize(e.to_string()))
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let ser = |e: csv::Error| ReportError::Serialize(e.to_string());
            w.write_record(["n", "rank", "label", "value", "value_float"]).map_err(ser)?;
            for r in rows {
                for (i, v) in r.values.iter().enumerate() {
                    w.write_record([
                        r.n.to_string(),
                        i.to_string(),
                        v.label.clone(),
                        render(&v.value),
                        crate::exact::render_float(to_f64(&v.value)),
                    ])
                    .map_err(ser)?;
                }
            }
            let bytes = w.into_inner().map_err(|e| ReportError::Serialize(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| ReportError::Serialize(e.to_string()))
        }
        OutputFormat::Md => {
            let mut s = String::from("| n | ascending special values of delta |\n|---|---|\n");
            for r in rows {
                let cells: Vec<String> =
                    r.values.iter().map(|v| format!("{} = {}", v.label, render(&v.value))).collect();
                let _ = writeln!(s, "| {} | {} |", r.n, cells.join(" < "));
            }
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis::{Conclusion, TheoremId};

    fn request(ambient: &str, profile: &str) -> AnalysisRequest {
        AnalysisRequest {
            ambient: AmbientSource::Model(ModelSpec::parse(ambient).unwrap()),
            profile: ProfileSource::Preset(profile.into()),
            degrees: vec![],
            flags: AssertedFlags::stable("test"),
            format: OutputFormat::Json,
            samples: 4,
            seed: 7,
        }
    }

    #[test]
    fn bdgg_report() {
        let doc = analyze(&request("E9", "bdgg:n=4")).unwrap();
        let p1: Vec<_> = doc
            .verdicts
            .iter()
            .filter(|e| e.verdict.theorem_id == TheoremId::HodgeP1)
            .collect();
        assert_eq!(p1.len(), 5);
        let at2 = p1.iter().find(|e| e.degree == Some(2)).unwrap();
        assert_eq!(at2.verdict.conclusion, Conclusion::Vanishing { degrees: vec![2, 6] });
    }

    #[test]
    fn json_roundtrip_and_determinism() {
        let req = request("S3xR2", "opposite-pair:t=1,m=4");
        let a = analyze(&req).unwrap();
        let b = analyze(&req).unwrap();
        assert_eq!(a, b);
        let text = a.to_json().unwrap();
        assert_eq!(ReportDocument::from_json(&text).unwrap(), a);
        assert!(a.to_csv().unwrap().starts_with("theorem_id,"));
        assert!(a.to_markdown().contains("HodgeP1"));
    }

    #[test]
    fn inconsistent_dimension() {
        let err = analyze(&request("S3xR2", "bdgg:n=4")).unwrap_err();
        assert!(matches!(err, ReportError::Inconsistent(_)));
    }

    #[test]
    fn numeric_gamma_for_cp() {
        let doc = analyze(&request("CP2", "opposite-pair:t=1,m=3")).unwrap();
        assert!(matches!(doc.ambient.gamma, Some(Num::Approx(_))));
    }
}
