use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{parse_rational, Num};

/// Theorem or criterion a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    Nullity,
    SpinVanishing,
    HodgeP1,
    HodgeP2,
    HodgeP3,
    /// Degrees 0, 1, m−1, m, handled outside the general engine.
    HodgeLowDegree,
    Abound,
    #[serde(rename = "CMC-P1")]
    CmcP1,
    #[serde(rename = "CMC-P2")]
    CmcP2,
    #[serde(rename = "CMC-P3")]
    CmcP3,
    #[serde(rename = "CMC-Spin")]
    CmcSpin,
    BergerSphere1,
    BergerSphere2,
    BergerSphere3,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant serializes");
        f.write_str(v.as_str().unwrap_or("?"))
    }
}

/// Outcome of a theorem evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "PascalCase")]
pub enum Conclusion {
    /// Every L²-harmonic object has constant length; for spinors the
    /// kernel dimension is bounded by the spinor rank.
    ConstantLength {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rank_bound: Option<u64>,
    },
    /// The L²-harmonic spaces of the listed degrees vanish (for spinors the
    /// list is empty).
    Vanishing { degrees: Vec<usize> },
    NullityIn01,
    NotApplicable,
}

/// One checked inequality or asserted input.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub name: String,
    pub pass: bool,
    /// Slack of the inequality (`≥ 0` on pass); `None` for boolean inputs
    /// or missing data.
    pub margin: Option<Num>,
    /// Whether the inequality is strict (a zero margin fails).
    pub strict: bool,
}

impl Hypothesis {
    /// `margin ≥ 0` (or `> 0` when strict).
    pub fn inequality(name: impl Into<String>, margin: Num, strict: bool) -> Self {
        let pass = if strict {
            margin.is_positive()
        } else {
            margin.is_nonnegative()
        };
        Hypothesis {
            name: name.into(),
            pass,
            margin: Some(margin),
            strict,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        Hypothesis {
            name: name.into(),
            pass,
            margin: None,
            strict: false,
        }
    }

    /// A required input that was not supplied.
    pub fn missing(name: impl Into<String>) -> Self {
        Hypothesis::flag(format!("{} (not supplied)", name.into()), false)
    }
}

#[derive(Serialize, Deserialize)]
struct HypothesisWire {
    name: String,
    pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    margin_num: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    margin_den: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    margin_float: Option<f64>,
    strict: bool,
}

impl Serialize for Hypothesis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (num, den, float) = match &self.margin {
            Some(Num::Exact(r)) => (Some(r.numer().to_string()), Some(r.denom().to_string()), None),
            Some(Num::Approx(x)) => (None, None, Some(*x)),
            None => (None, None, None),
        };
        HypothesisWire {
            name: self.name.clone(),
            pass: self.pass,
            margin_num: num,
            margin_den: den,
            margin_float: float,
            strict: self.strict,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypothesis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = HypothesisWire::deserialize(d)?;
        let margin = match (w.margin_num, w.margin_den, w.margin_float) {
            (Some(n), Some(den), None) => Some(Num::Exact(
                parse_rational(&format!("{n}/{den}")).map_err(serde::de::Error::custom)?,
            )),
            (None, None, Some(x)) => Some(Num::Approx(x)),
            (None, None, None) => None,
            _ => return Err(serde::de::Error::custom("inconsistent margin fields")),
        };
        Ok(Hypothesis {
            name: w.name,
            pass: w.pass,
            margin,
            strict: w.strict,
        })
    }
}

/// Result of evaluating one theorem.
///
/// Invariant: a conclusion other than `NotApplicable` implies every
/// hypothesis passed. Construct through [`TheoremVerdict::evaluate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    /// `on_success` if every hypothesis passes, `NotApplicable` otherwise.
    pub fn evaluate(
        theorem_id: TheoremId,
        hypotheses: Vec<Hypothesis>,
        on_success: Conclusion,
        notes: Vec<String>,
    ) -> Self {
        let all = hypotheses.iter().all(|h| h.pass);
        TheoremVerdict {
            theorem_id,
            hypotheses,
            conclusion: if all { on_success } else { Conclusion::NotApplicable },
            notes,
        }
    }

    pub fn applies(&self) -> bool {
        self.conclusion != Conclusion::NotApplicable
    }

    pub fn hypothesis(&self, prefix: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name.starts_with(prefix))
    }
}
