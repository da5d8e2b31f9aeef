use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::spec::ModelSpec;
use crate::exact::{int, opt_rational_string, rat, rational_string, Rational};

/// An eigenvalue with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigen {
    #[serde(with = "rational_string")]
    pub value: Rational,
    pub multiplicity: usize,
}

/// Curvature-operator spectrum: exact, or only available numerically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "eigenvalues", rename_all = "kebab-case")]
pub enum Spectrum {
    Exact(Vec<Eigen>),
    NumericOnly,
}

impl Spectrum {
    pub fn exact(&self) -> Option<&[Eigen]> {
        match self {
            Spectrum::Exact(e) => Some(e),
            Spectrum::NumericOnly => None,
        }
    }

    pub fn min(&self) -> Option<&Rational> {
        self.exact()?.first().map(|e| &e.value)
    }

    /// All eigenvalues repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Option<Vec<Rational>> {
        Some(
            self.exact()?
                .iter()
                .flat_map(|e| std::iter::repeat_n(e.value.clone(), e.multiplicity))
                .collect(),
        )
    }
}

/// Merge `(value, multiplicity)` pairs: equal values are combined, zero
/// multiplicities dropped, result sorted ascending.
pub fn collect_spectrum(parts: impl IntoIterator<Item = (Rational, usize)>) -> Vec<Eigen> {
    let mut map: BTreeMap<Rational, usize> = BTreeMap::new();
    for (v, m) in parts {
        if m > 0 {
            *map.entry(v).or_default() += m;
        }
    }
    map.into_iter()
        .map(|(value, multiplicity)| Eigen { value, multiplicity })
        .collect()
}

/// Closed-form curvature data of a model space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSummary {
    pub spec: ModelSpec,
    pub dim: usize,
    /// `None` when the space has no 2-planes (dimension 1).
    #[serde(with = "opt_rational_string")]
    pub sec_min: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sec_max: Option<Rational>,
    pub curvature_operator_spectrum: Spectrum,
    pub ricci_eigenvalues: Vec<Eigen>,
    #[serde(with = "rational_string")]
    pub scalar: Rational,
    /// Smallest curvature-operator eigenvalue, when known in closed form.
    #[serde(with = "opt_rational_string")]
    pub gamma: Option<Rational>,
    pub flags: Vec<String>,
}

impl CurvatureSummary {
    pub fn ricci_min(&self) -> Option<&Rational> {
        self.ricci_eigenvalues.first().map(|e| &e.value)
    }
}

/// Bivector count `m(m−1)/2`.
pub fn bivector_dim(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// The three sectional curvatures of the Berger sphere: on
/// `(ξ̂, X)`, `(X, JX)` and `(X, Y)`.
pub fn berger_sectional_values(delta: &Rational) -> [Rational; 3] {
    [delta.clone(), int(4) - int(3) * delta, int(1)]
}

/// Curvature-operator eigenvalues of the Berger sphere with multiplicities.
/// At `delta = 1` the three families merge into `1` with multiplicity
/// `n(2n+1)`.
pub fn berger_operator_spectrum(n: usize, delta: &Rational) -> Vec<Eigen> {
    let ni = n as i64;
    collect_spectrum([
        (delta.clone(), n * (n + 1)),
        (int(2) - delta, n * n - 1),
        (int(2 * ni + 2) - int(2 * ni + 1) * delta, 1),
    ])
}

/// Ricci eigenvalues: `2nδ` along the Reeb field, `2n+2−2δ` on the
/// horizontal distribution.
pub fn berger_ricci(n: usize, delta: &Rational) -> Vec<Eigen> {
    let ni = n as i64;
    collect_spectrum([
        (int(2 * ni) * delta, 1),
        (int(2 * ni + 2) - int(2) * delta, 2 * n),
    ])
}

pub fn berger_scalar(n: usize, delta: &Rational) -> Rational {
    let ni = n as i64;
    int(2 * ni) * (int(2 * ni + 2) - delta)
}

/// Curvature-operator spectrum of a product: the factor spectra plus a zero
/// eigenvalue for every mixed bivector.
pub fn product_spectrum(factors: &[CurvatureSummary]) -> Spectrum {
    let mut parts = Vec::new();
    for f in factors {
        match &f.curvature_operator_spectrum {
            Spectrum::Exact(e) => parts.extend(e.iter().map(|e| (e.value.clone(), e.multiplicity))),
            Spectrum::NumericOnly => return Spectrum::NumericOnly,
        }
    }
    let mut mixed = 0;
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            mixed += a.dim * b.dim;
        }
    }
    parts.push((Rational::zero(), mixed));
    Spectrum::Exact(collect_spectrum(parts))
}

fn summary_with_gamma(
    spec: &ModelSpec,
    sec: Option<(Rational, Rational)>,
    spectrum: Spectrum,
    ricci: Vec<Eigen>,
    scalar: Rational,
    flags: Vec<String>,
) -> CurvatureSummary {
    let gamma = spectrum.min().cloned();
    let (sec_min, sec_max) = match sec {
        Some((a, b)) => (Some(a), Some(b)),
        None => (None, None),
    };
    CurvatureSummary {
        spec: spec.clone(),
        dim: spec.dim(),
        sec_min,
        sec_max,
        curvature_operator_spectrum: spectrum,
        ricci_eigenvalues: ricci,
        scalar,
        gamma,
        flags,
    }
}

/// Closed-form curvature summary. The spec must be valid.
pub fn closed_form_summary(spec: &ModelSpec) -> CurvatureSummary {
    let m = spec.dim();
    let planes = if m >= 2 { Some(()) } else { None };
    match spec {
        ModelSpec::Euclidean(_) => summary_with_gamma(
            spec,
            planes.map(|_| (Rational::zero(), Rational::zero())),
            Spectrum::Exact(collect_spectrum([(Rational::zero(), bivector_dim(m))])),
            collect_spectrum([(Rational::zero(), m)]),
            Rational::zero(),
            vec![],
        ),
        ModelSpec::RoundSphere { dim, radius } => {
            let k = Rational::one() / (radius * radius);
            let mi = *dim as i64;
            summary_with_gamma(
                spec,
                Some((k.clone(), k.clone())),
                Spectrum::Exact(collect_spectrum([(k.clone(), bivector_dim(m))])),
                collect_spectrum([(int(mi - 1) * &k, m)]),
                int(mi * (mi - 1)) * &k,
                vec![],
            )
        }
        ModelSpec::BergerSphere { n, delta } => {
            let secs = berger_sectional_values(delta);
            let lo = secs.iter().min().unwrap().clone();
            let hi = secs.iter().max().unwrap().clone();
            let mut flags = Vec::new();
            if *delta >= rat(4, 3) {
                flags.push("sectional curvature not positive (delta >= 4/3)".to_string());
            }
            summary_with_gamma(
                spec,
                Some((lo, hi)),
                Spectrum::Exact(berger_operator_spectrum(*n, delta)),
                berger_ricci(*n, delta),
                berger_scalar(*n, delta),
                flags,
            )
        }
        ModelSpec::FubiniStudyCP { n, scale } => {
            // holomorphic sectional curvature 4/scale, Einstein
            let ni = *n as i64;
            let inv = Rational::one() / scale;
            let (lo, hi) = if *n == 1 {
                (int(4) * &inv, int(4) * &inv)
            } else {
                (inv.clone(), int(4) * &inv)
            };
            summary_with_gamma(
                spec,
                Some((lo, hi)),
                Spectrum::NumericOnly,
                collect_spectrum([(int(2 * ni + 2) * &inv, m)]),
                int(4 * ni * (ni + 1)) * &inv,
                vec!["curvature-operator spectrum available numerically only".to_string()],
            )
        }
        ModelSpec::Product(fs) => {
            let parts: Vec<CurvatureSummary> = fs.iter().map(closed_form_summary).collect();
            let spectrum = product_spectrum(&parts);
            // mixed planes have curvature between 0 and the factor extremes
            let lo = parts
                .iter()
                .filter_map(|p| p.sec_min.clone())
                .fold(Rational::zero(), |a, b| a.min(b));
            let hi = parts
                .iter()
                .filter_map(|p| p.sec_max.clone())
                .fold(Rational::zero(), |a, b| a.max(b));
            let ricci = collect_spectrum(parts.iter().flat_map(|p| {
                p.ricci_eigenvalues
                    .iter()
                    .map(|e| (e.value.clone(), e.multiplicity))
            }));
            let scalar = parts.iter().map(|p| p.scalar.clone()).sum();
            let flags = parts.iter().flat_map(|p| p.flags.clone()).collect();
            summary_with_gamma(spec, Some((lo, hi)), spectrum, ricci, scalar, flags)
        }
    }
}
