//! δ-thresholds for minimal hypersurfaces of Berger spheres.
//!
//! Every threshold is obtained by solving an affine equation in δ whose
//! coefficients are read off the closed-form curvature of the model space
//! (scalar curvature, Ricci and curvature-operator eigenvalues, sectional
//! extremes), combined with the pinching constants. Nothing here encodes
//! the final fractions directly.

use serde::{Deserialize, Serialize};

use super::conditions::check_minimal_condition;
use super::constants::{c_formula, epsilon_formula};
use super::profile::PrincipalCurvatureProfile;
use super::theorems::AssertedFlags;
use super::verdict::{Conclusion, Hypothesis, TheoremId, TheoremVerdict};
use super::HypothesisError;
use crate::exact::{int, rat, rational_string, Num, Rational};
use crate::model::{berger_operator_spectrum, berger_ricci, berger_scalar, berger_sectional_values};

/// `f(δ) = c0 + c1·δ`.
#[derive(Debug, Clone, PartialEq)]
struct Affine {
    c0: Rational,
    c1: Rational,
}

impl Affine {
    /// Fit from two evaluations.
    fn fit(x1: &Rational, y1: &Rational, x2: &Rational, y2: &Rational) -> Self {
        let c1 = (y2 - y1) / (x2 - x1);
        let c0 = y1 - &c1 * x1;
        Affine { c0, c1 }
    }

    fn eval(&self, x: &Rational) -> Rational {
        &self.c0 + &self.c1 * x
    }

    fn root(&self) -> Option<Rational> {
        if self.c1 == int(0) {
            None
        } else {
            Some(-&self.c0 / &self.c1)
        }
    }

    /// Solve `self(δ) = k·other(δ)`.
    fn solve_ratio(&self, other: &Affine, k: &Rational) -> Option<Rational> {
        Affine {
            c0: &self.c0 - k * &other.c0,
            c1: &self.c1 - k * &other.c1,
        }
        .root()
    }
}

// Two sample parameters away from the round point δ = 1, where eigenvalue
// families of the Berger metric collide.
fn samples() -> (Rational, Rational) {
    (rat(1, 2), rat(1, 3))
}

fn fit_scalar(n: usize) -> Affine {
    let (x1, x2) = samples();
    Affine::fit(&x1, &berger_scalar(n, &x1), &x2, &berger_scalar(n, &x2))
}

/// Affine branches of a spectrum-like family, matched by multiplicity.
fn fit_branches(x1: &Rational, x2: &Rational, f: impl Fn(&Rational) -> Vec<(Rational, usize)>) -> Vec<Affine> {
    let a = f(x1);
    let b = f(x2);
    a.iter()
        .map(|(v1, mult)| {
            let (v2, _) = b
                .iter()
                .find(|(_, m2)| m2 == mult)
                .expect("multiplicities are distinct away from the round point");
            Affine::fit(x1, v1, x2, v2)
        })
        .collect()
}

fn spectrum_branches(n: usize) -> Vec<Affine> {
    let (x1, x2) = samples();
    fit_branches(&x1, &x2, |d| {
        berger_operator_spectrum(n, d).into_iter().map(|e| (e.value, e.multiplicity)).collect()
    })
}

fn ricci_branches(n: usize) -> Vec<Affine> {
    let (x1, x2) = samples();
    fit_branches(&x1, &x2, |d| {
        berger_ricci(n, d).into_iter().map(|e| (e.value, e.multiplicity)).collect()
    })
}

fn sectional_branches() -> Vec<Affine> {
    let (x1, x2) = samples();
    let a = berger_sectional_values(&x1);
    let b = berger_sectional_values(&x2);
    a.iter().zip(&b).map(|(y1, y2)| Affine::fit(&x1, y1, &x2, y2)).collect()
}

/// Smallest positive root among branches that decrease through zero;
/// positivity of all branches holds on `(0, root)`.
fn positivity_limit(branches: &[Affine]) -> Option<Rational> {
    branches
        .iter()
        .filter(|b| b.c1 < int(0))
        .filter_map(Affine::root)
        .filter(|r| *r > int(0))
        .min()
}

fn extreme_branch<'a>(branches: &'a [Affine], at: &Rational, largest: bool) -> &'a Affine {
    let key = |b: &&Affine| b.eval(at);
    if largest {
        branches.iter().max_by_key(key).expect("nonempty")
    } else {
        branches.iter().min_by_key(key).expect("nonempty")
    }
}

/// Upper end of `δ ∈ (lo, hi)` where `max sec ≤ k·min sec`, with the
/// extreme branches identified at `probe`.
fn pinching_limit(branches: &[Affine], probe: &Rational, k: &Rational) -> Option<Rational> {
    let top = extreme_branch(branches, probe, true);
    let bottom = extreme_branch(branches, probe, false);
    top.solve_ratio(bottom, k)
}

/// Derived δ-thresholds for `(S^{2n+1}, g_δ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BergerThresholds {
    pub n: usize,
    /// Scalar curvature is nonnegative iff `δ ≤ spinor_upper`.
    #[serde(with = "rational_string")]
    pub spinor_upper: Rational,
    /// Curvature operator is nonnegative iff `δ ≤ operator_nonneg_upper`.
    #[serde(with = "rational_string")]
    pub operator_nonneg_upper: Rational,
    /// Solution of `δ = ε_{2n,n}(4 − 3δ)`.
    #[serde(with = "rational_string")]
    pub pinched_upper: Rational,
    /// `max(operator_nonneg_upper, pinched_upper)`.
    #[serde(with = "rational_string")]
    pub forms_upper: Rational,
    /// Solution of `4 − 3δ = c_{2n}δ`.
    #[serde(with = "rational_string")]
    pub two_form_lower: Rational,
    /// Solution of `δ = c_{2n}(4 − 3δ)`.
    #[serde(with = "rational_string")]
    pub two_form_upper: Rational,
    /// Ricci curvature is positive iff `δ < ricci_positive_upper`.
    #[serde(with = "rational_string")]
    pub ricci_positive_upper: Rational,
    /// Sectional curvature is positive iff `δ < sectional_positive_upper`.
    #[serde(with = "rational_string")]
    pub sectional_positive_upper: Rational,
    pub notes: Vec<String>,
}

impl BergerThresholds {
    pub fn derive(n: usize) -> Result<Self, HypothesisError> {
        if n < 2 {
            return Err(HypothesisError::Degree { p: n, m: 2 * n, expected: "n >= 2".into() });
        }
        let m = 2 * n;
        let sec = sectional_branches();
        let spinor_upper = fit_scalar(n).root().expect("scalar depends on delta");
        let operator_nonneg_upper =
            positivity_limit(&spectrum_branches(n)).expect("operator branch crosses zero");
        let ricci_positive_upper = positivity_limit(&ricci_branches(n)).expect("Ricci branch crosses zero");
        let sectional_positive_upper = positivity_limit(&sec).expect("sectional branch crosses zero");

        // Pinched side above the round point: probe inside (1, 4/3).
        let above = rat(7, 6);
        let below = rat(1, 2);
        let eps = epsilon_formula(m, n);
        let c = c_formula(m);
        let pinched_upper = pinching_limit(&sec, &above, &eps).expect("pinching equation");
        let two_form_upper = pinching_limit(&sec, &above, &c).expect("pinching equation");
        let two_form_lower = pinching_limit(&sec, &below, &c).expect("pinching equation");
        let forms_upper = operator_nonneg_upper.clone().max(pinched_upper.clone());

        let mut notes = vec![format!(
            "lower 2-form threshold 8(n-1)/(17n-14) = {two_form_lower}; the variant with 17m-14 \
             (m = 2n) in the denominator does not solve 4 - 3δ = c_{{2n}}·δ"
        )];
        if m < 6 {
            notes.push(format!(
                "m = {m}: epsilon and c evaluated from their closed forms below the m >= 6 range \
                 of the pinching criteria"
            ));
        }
        if operator_nonneg_upper == pinched_upper {
            notes.push("nonnegative-operator and pinching thresholds coincide".into());
        }
        Ok(BergerThresholds {
            n,
            spinor_upper,
            operator_nonneg_upper,
            pinched_upper,
            forms_upper,
            two_form_lower,
            two_form_upper,
            ricci_positive_upper,
            sectional_positive_upper,
            notes,
        })
    }

    /// Threshold verdicts at `delta`.
    ///
    /// With a profile (minimal, `2n` curvatures) the subset conditions are
    /// checked at every `p ∈ 2..=n`; without one they are reported missing.
    pub fn verdicts(
        &self,
        delta: &Rational,
        profile: Option<&PrincipalCurvatureProfile>,
        flags: &AssertedFlags,
    ) -> Result<Vec<TheoremVerdict>, HypothesisError> {
        let n = self.n;
        let m = 2 * n;
        if let Some(pr) = profile {
            if pr.dim() != m {
                return Err(HypothesisError::Inconsistent(format!(
                    "profile has {} curvatures, a hypersurface of S^{} needs {m}",
                    pr.dim(),
                    m + 1
                )));
            }
        }
        let d = Num::Exact(delta.clone());
        let stable = Hypothesis::flag("stable minimal immersion (asserted)", flags.stable.is_some());
        let positive = Hypothesis::inequality("delta > 0", d.clone(), true);
        let upper = |name: &str, bound: &Rational| {
            Hypothesis::inequality(format!("delta <= {name} = {}", crate::exact::render(bound)), Num::Exact(bound - delta), false)
        };
        let condition = |p: usize| -> Result<Hypothesis, HypothesisError> {
            Ok(match profile {
                Some(pr) => {
                    let c = check_minimal_condition(pr, p)?;
                    Hypothesis::inequality(format!("|A|^2 - K_alpha^2 >= 0 for |alpha|={p}"), c.margin, false)
                }
                None => Hypothesis::missing(format!("principal curvature condition for |alpha|={p}")),
            })
        };

        let mut out = vec![TheoremVerdict::evaluate(
            TheoremId::BergerSphere1,
            vec![stable.clone(), positive.clone(), upper("2n+2", &self.spinor_upper)],
            Conclusion::Vanishing { degrees: vec![] },
            vec!["Berger spheres other than the round one carry no totally geodesic hypersurfaces, \
                  and those of the round sphere are unstable"
                .into()],
        )];
        for p in 2..=n {
            out.push(TheoremVerdict::evaluate(
                TheoremId::BergerSphere2,
                vec![
                    stable.clone(),
                    positive.clone(),
                    upper("max((2n+2)/(2n+1), 4(2n^2+n+6)/(8n^2+n+18))", &self.forms_upper),
                    condition(p)?,
                ],
                Conclusion::Vanishing { degrees: dedup(vec![p, m - p]) },
                vec![],
            ));
        }
        out.push(TheoremVerdict::evaluate(
            TheoremId::BergerSphere3,
            vec![
                stable,
                Hypothesis::inequality(
                    format!("delta >= 8(n-1)/(17n-14) = {}", crate::exact::render(&self.two_form_lower)),
                    Num::Exact(delta - &self.two_form_lower),
                    false,
                ),
                upper("4(11n-8)/(35n-26)", &self.two_form_upper),
                condition(2)?,
            ],
            Conclusion::Vanishing { degrees: dedup(vec![2, m - 2]) },
            self.notes.clone(),
        ));
        Ok(out)
    }
}

fn dedup(mut v: Vec<usize>) -> Vec<usize> {
    v.dedup();
    v
}

/// One labelled special value of δ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledValue {
    pub label: String,
    #[serde(with = "rational_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure1Row {
    pub n: usize,
    /// Ascending; ties keep the canonical label order.
    pub values: Vec<LabeledValue>,
}

impl Figure1Row {
    pub fn order(&self) -> Vec<&str> {
        self.values.iter().map(|v| v.label.as_str()).collect()
    }
}

pub const FIGURE1_LABELS: [&str; 7] = [
    "two_form_lower",
    "operator_nonneg",
    "pinched_epsilon",
    "two_form_upper",
    "sectional_positive",
    "ricci_positive",
    "scalar_nonneg",
];

/// Sorted special δ values for each `n` in `n_min..=n_max` (within `[2, 64]`).
pub fn figure1_data(n_min: usize, n_max: usize) -> Result<Vec<Figure1Row>, HypothesisError> {
    if n_min < 2 || n_max > 64 || n_min > n_max {
        return Err(HypothesisError::Degree {
            p: n_min,
            m: n_max,
            expected: "2 <= n_min <= n_max <= 64".into(),
        });
    }
    (n_min..=n_max)
        .map(|n| {
            let t = BergerThresholds::derive(n)?;
            let raw = [
                t.two_form_lower,
                t.operator_nonneg_upper,
                t.pinched_upper,
                t.two_form_upper,
                t.sectional_positive_upper,
                t.ricci_positive_upper,
                t.spinor_upper,
            ];
            let mut values: Vec<LabeledValue> = FIGURE1_LABELS
                .iter()
                .zip(raw)
                .map(|(l, v)| LabeledValue { label: (*l).to_string(), value: v })
                .collect();
            values.sort_by(|a, b| a.value.cmp(&b.value));
            Ok(Figure1Row { n, values })
        })
        .collect()
}
