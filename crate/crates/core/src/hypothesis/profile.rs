use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::HypothesisError;
use crate::exact::{Num, FLOAT_ZERO_TOL};

/// Principal curvatures `k₁…k_m` of a hypersurface at one point.
///
/// `H = Σ kᵢ` and `|A|² = Σ kᵢ²` are always recomputed from `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalCurvatureProfile {
    k: Vec<Num>,
}

impl PrincipalCurvatureProfile {
    pub fn new(k: Vec<Num>) -> Result<Self, HypothesisError> {
        if k.len() < 2 {
            return Err(HypothesisError::Profile(format!(
                "need at least 2 principal curvatures, got {}",
                k.len()
            )));
        }
        if k.iter().any(|x| matches!(x, Num::Approx(v) if !v.is_finite())) {
            return Err(HypothesisError::Profile("non-finite curvature".into()));
        }
        Ok(PrincipalCurvatureProfile { k })
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self, HypothesisError> {
        Self::new(pairs.iter().map(|&(n, d)| Num::ratio(n, d)).collect())
    }

    pub fn from_f64(values: &[f64]) -> Result<Self, HypothesisError> {
        Self::new(values.iter().map(|&x| Num::Approx(x)).collect())
    }

    /// Totally geodesic point in dimension `m`.
    pub fn zeros(m: usize) -> Result<Self, HypothesisError> {
        Self::new(vec![Num::zero(); m])
    }

    /// Comma-separated curvatures, e.g. `1,1,-2/3,-2/3,-2/3` or `0.5,-0.5`.
    pub fn parse(text: &str) -> Result<Self, HypothesisError> {
        let mut k = Vec::new();
        for (i, tok) in text.split(',').enumerate() {
            let tok = tok.trim();
            let x = Num::parse(tok).map_err(|e| {
                HypothesisError::Profile(format!("entry {} `{tok}`: {e}", i + 1))
            })?;
            k.push(x);
        }
        Self::new(k)
    }

    pub fn k(&self) -> &[Num] {
        &self.k
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }

    pub fn is_exact(&self) -> bool {
        self.k.iter().all(Num::is_exact)
    }

    pub fn mean_curvature(&self) -> Num {
        self.k.iter().cloned().sum()
    }

    pub fn norm_a2(&self) -> Num {
        self.k.iter().map(Num::square).sum()
    }

    /// `H = 0` exactly for rational data, `|H| < 1e-12` otherwise.
    pub fn is_minimal(&self) -> bool {
        self.mean_curvature().is_zero()
    }

    pub fn is_totally_geodesic(&self) -> bool {
        self.k.iter().all(Num::is_zero)
    }

    /// Number of curvatures that are nonzero (float tolerance applies).
    pub fn nonzero_count(&self) -> usize {
        self.k.iter().filter(|x| !x.is_zero()).count()
    }

    /// `K_α = Σ_{i∈α} kᵢ` with 0-based indices.
    pub fn k_alpha(&self, alpha: &[usize]) -> Result<Num, HypothesisError> {
        if alpha.is_empty() {
            return Err(HypothesisError::Subset("empty index set".into()));
        }
        let mut seen = vec![false; self.k.len()];
        let mut sum = Num::zero();
        for &i in alpha {
            if i >= self.k.len() {
                return Err(HypothesisError::Subset(format!(
                    "index {} out of range 1..={}",
                    i + 1,
                    self.k.len()
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(HypothesisError::Subset(format!("index {} repeated", i + 1)));
            }
            sum = sum + &self.k[i];
        }
        Ok(sum)
    }

    /// `K_{⋆α} = H − K_α`.
    pub fn k_complement(&self, alpha: &[usize]) -> Result<Num, HypothesisError> {
        Ok(self.mean_curvature() - self.k_alpha(alpha)?)
    }
}

impl fmt::Display for PrincipalCurvatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.k.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PrincipalCurvatureProfile {
    type Err = HypothesisError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for PrincipalCurvatureProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.k.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrincipalCurvatureProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let k = Vec::<Num>::deserialize(d)?;
        Self::new(k).map_err(serde::de::Error::custom)
    }
}

/// Named profiles accepted wherever a profile is expected.
///
/// * `bdgg:n=4[,k=1]`: `(k,…,k,−k,…,−k)`, each block of size n
/// * `totally-geodesic:m=6`
/// * `opposite-pair:t=1,m=8`: `(−t,0,…,0,t)`
pub fn preset(text: &str) -> Result<PrincipalCurvatureProfile, HypothesisError> {
    let (name, args) = text
        .split_once(':')
        .ok_or_else(|| HypothesisError::Profile(format!("`{text}` is not a preset")))?;
    let mut n = None;
    let mut m = None;
    let mut t = Num::int(1);
    for kv in args.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = kv
            .split_once('=')
            .ok_or_else(|| HypothesisError::Profile(format!("expected key=value, got `{kv}`")))?;
        let bad = |e: String| HypothesisError::Profile(format!("{key}: {e}"));
        match key.trim() {
            "n" => n = Some(value.trim().parse::<usize>().map_err(|e| bad(e.to_string()))?),
            "m" => m = Some(value.trim().parse::<usize>().map_err(|e| bad(e.to_string()))?),
            "k" | "t" => t = Num::parse(value.trim()).map_err(|e| bad(e.to_string()))?,
            other => {
                return Err(HypothesisError::Profile(format!("unknown preset key `{other}`")))
            }
        }
    }
    let need = |v: Option<usize>, key: &str| {
        v.ok_or_else(|| HypothesisError::Profile(format!("preset `{name}` needs {key}=")))
    };
    match name.trim() {
        "bdgg" => {
            let n = need(n, "n")?;
            let mut k = vec![t.clone(); n];
            k.extend(std::iter::repeat_n(-t, n));
            PrincipalCurvatureProfile::new(k)
        }
        "totally-geodesic" => PrincipalCurvatureProfile::zeros(need(m, "m")?),
        "opposite-pair" => {
            let m = need(m, "m")?;
            if m < 2 {
                return Err(HypothesisError::Profile("opposite-pair needs m >= 2".into()));
            }
            let mut k = vec![Num::zero(); m];
            k[0] = -t.clone();
            k[m - 1] = t;
            PrincipalCurvatureProfile::new(k)
        }
        other => Err(HypothesisError::Profile(format!("unknown preset `{other}`"))),
    }
}

/// A preset name (contains `:`) or a comma-separated list.
pub fn parse_profile_or_preset(text: &str) -> Result<PrincipalCurvatureProfile, HypothesisError> {
    if text.contains(':') {
        preset(text)
    } else {
        PrincipalCurvatureProfile::parse(text)
    }
}

/// Approximate equality used when comparing float curvatures.
pub(crate) fn num_eq(a: &Num, b: &Num) -> bool {
    match (a, b) {
        (Num::Exact(x), Num::Exact(y)) => x == y,
        _ => {
            let (x, y) = (a.to_f64(), b.to_f64());
            (x - y).abs() <= FLOAT_ZERO_TOL * x.abs().max(y.abs()).max(1.0)
        }
    }
}
