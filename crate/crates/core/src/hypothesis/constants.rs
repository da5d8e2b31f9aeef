//! Pinching constants and curvature thresholds, all exact.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::HypothesisError;
use crate::exact::{int, rat, rational_string, Num, Rational};

/// `μ = ⌊(m+1)/2⌋`.
pub fn mu(m: usize) -> usize {
    m.div_ceil(2)
}

/// `ℓ = ⌊m/2⌋`.
pub fn ell(m: usize) -> usize {
    m / 2
}

fn r(n: usize) -> Rational {
    int(n as i64)
}

fn pinching_degree(m: usize, p: usize) -> Result<(), HypothesisError> {
    if m < 6 || p < 2 || 2 * p > m {
        return Err(HypothesisError::Degree {
            p,
            m,
            expected: "m >= 6 and 2 <= p <= m/2".into(),
        });
    }
    Ok(())
}

/// `ε_{m,p} = (p(m−p)(2μ+1) + 3m) / (2p(m−p)(μ−1))`.
pub fn epsilon_constant(m: usize, p: usize) -> Result<Rational, HypothesisError> {
    pinching_degree(m, p)?;
    Ok(epsilon_formula(m, p))
}

/// The `ε_{m,p}` expression without the dimension guard; needs `m ≥ 3`
/// and `0 < p < m`.
pub(crate) fn epsilon_formula(m: usize, p: usize) -> Rational {
    let pq = r(p * (m - p));
    let mu = r(mu(m));
    let num = &pq * (int(2) * &mu + int(1)) + int(3) * r(m);
    let den = int(2) * &pq * (mu - int(1));
    num / den
}

/// `c_m = (11m−16)/(2(m−2))` for even m, `(11m−18)/(2(m−3))` for odd m.
pub fn c_constant(m: usize) -> Result<Rational, HypothesisError> {
    if m < 6 {
        return Err(HypothesisError::Degree { p: 2, m, expected: "m >= 6".into() });
    }
    Ok(c_formula(m))
}

/// The `c_m` expression without the dimension guard; needs `m ≥ 4`.
pub(crate) fn c_formula(m: usize) -> Rational {
    let m = m as i64;
    if m % 2 == 0 {
        rat(11 * m - 16, 2 * (m - 2))
    } else {
        rat(11 * m - 18, 2 * (m - 3))
    }
}

fn check_pinching(a: &Num, b: &Num) -> Result<(), HypothesisError> {
    if !a.is_positive() {
        return Err(HypothesisError::Pinching(format!("need a > 0, got a = {a}")));
    }
    if b.cmp_num(a).is_lt() {
        return Err(HypothesisError::Pinching(format!("need a <= b, got [{a}, {b}]")));
    }
    Ok(())
}

/// Lower bound `(a+b)/2 − (b−a)(4μ−1)/6` of the curvature operator of an
/// `[a,b]`-pinched manifold, with `μ = ⌊(m+1)/2⌋`.
pub fn pinched_operator_lb(a: &Num, b: &Num, m: usize) -> Result<Num, HypothesisError> {
    check_pinching(a, b)?;
    let mu = Num::int(mu(m) as i64);
    let half_sum = &(a + b) / &Num::int(2);
    let spread = &(b - a) * &(&(&Num::int(4) * &mu) - &Num::int(1));
    Ok(half_sum - &spread / &Num::int(6))
}

/// Bound `2(b−a)/3` on the components `|R_{ijkl}|` with four distinct
/// indices of an `[a,b]`-pinched curvature tensor.
pub fn berger_component_bound(a: &Num, b: &Num) -> Result<Num, HypothesisError> {
    check_pinching(a, b)?;
    Ok(&(&Num::int(2) * &(b - a)) / &Num::int(3))
}

/// Lower bound `(3m−4)a/2 − 2(ℓ−1)(b−a)/3` used for 2-forms.
pub fn two_form_pinched_lb(a: &Num, b: &Num, m: usize) -> Result<Num, HypothesisError> {
    check_pinching(a, b)?;
    let lead = &(&Num::int(3 * m as i64 - 4) * a) / &Num::int(2);
    let ell1 = Num::int(ell(m) as i64 - 1);
    Ok(lead - &ell1 * &berger_component_bound(a, b)?)
}

/// `(γp(m−p) + b)/(min(p, m−p) − 1)`.
pub fn beta_bound(m: usize, p: usize, gamma: &Num, ricci_lb: &Num) -> Result<Num, HypothesisError> {
    if p < 2 || p + 2 > m {
        return Err(HypothesisError::Degree { p, m, expected: "2 <= p <= m-2".into() });
    }
    let q = p.min(m - p);
    let num = &(gamma * &Num::int((p * (m - p)) as i64)) + ricci_lb;
    Ok(&num / &Num::int(q as i64 - 1))
}

/// Round-sphere specialisation `(p(m−p) + m)/(p−1)` (`γ = 1`, `b = m`).
pub fn sphere_beta(p: usize, m: usize) -> Result<Rational, HypothesisError> {
    if p < 2 || 2 * p > m {
        return Err(HypothesisError::Degree { p, m, expected: "2 <= p <= m/2".into() });
    }
    Ok(r(p * (m - p) + m) / r(p - 1))
}

/// Dimensions in `range` with `β(⌊m/2⌋, m) > m`.
pub fn large_beta_dims(range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    range
        .filter(|&m| m >= 4)
        .filter(|&m| sphere_beta(m / 2, m).map(|b| b > r(m)).unwrap_or(false))
        .collect()
}

/// Exact constants for one `(m, p)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PinchingConstants {
    pub m: usize,
    pub p: usize,
    #[serde(with = "rational_string")]
    pub epsilon: Rational,
    #[serde(with = "rational_string")]
    pub c: Rational,
    pub mu: usize,
    pub ell: usize,
}

impl PinchingConstants {
    pub fn new(m: usize, p: usize) -> Result<Self, HypothesisError> {
        Ok(PinchingConstants {
            m,
            p,
            epsilon: epsilon_constant(m, p)?,
            c: c_constant(m)?,
            mu: mu(m),
            ell: ell(m),
        })
    }

    /// `p(m−p)·lb(1, ε) + m`, zero exactly when ε sits on the boundary.
    pub fn epsilon_boundary_residual(&self) -> Rational {
        let lb = pinched_operator_lb(&Num::int(1), &Num::Exact(self.epsilon.clone()), self.m)
            .expect("epsilon > 1");
        let lb = lb.as_exact().cloned().expect("exact inputs");
        r(self.p * (self.m - self.p)) * lb + r(self.m)
    }

    /// `(3m−4)/2 − (2(ℓ−1)/3)(c − 1)`, zero exactly on the boundary.
    pub fn c_boundary_residual(&self) -> Rational {
        rat(3 * self.m as i64 - 4, 2)
            - rat(2 * (self.ell as i64 - 1), 3) * (&self.c - Rational::one())
    }
}

/// One row of the exported constants table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantRow {
    pub m: usize,
    pub p: usize,
    #[serde(with = "rational_string")]
    pub epsilon: Rational,
    #[serde(with = "rational_string")]
    pub c: Rational,
    #[serde(with = "rational_string")]
    pub sphere_beta: Rational,
}

/// Constants for `m_min ≤ m ≤ m_max`, `2 ≤ p ≤ m/2`.
pub fn constants_table(m_min: usize, m_max: usize) -> Result<Vec<ConstantRow>, HypothesisError> {
    let mut rows = Vec::new();
    for m in m_min.max(6)..=m_max {
        for p in 2..=m / 2 {
            rows.push(ConstantRow {
                m,
                p,
                epsilon: epsilon_constant(m, p)?,
                c: c_constant(m)?,
                sphere_beta: sphere_beta(p, m)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon_constant(6, 2).unwrap(), rat(37, 16));
        for n in 3..20_i64 {
            let m = 2 * n as usize;
            assert_eq!(
                epsilon_constant(m, n as usize).unwrap(),
                rat(2 * n * n + n + 6, 2 * n * (n - 1))
            );
        }
        assert!(epsilon_constant(6, 1).is_err());
        assert!(epsilon_constant(6, 4).is_err());
        assert!(epsilon_constant(5, 2).is_err());
    }

    #[test]
    fn c_values() {
        assert_eq!(c_constant(6).unwrap(), rat(25, 4));
        assert_eq!(c_constant(7).unwrap(), rat(59, 8));
        assert!(c_constant(5).is_err());
    }

    #[test]
    fn boundaries() {
        let k = PinchingConstants::new(6, 2).unwrap();
        assert!(k.epsilon_boundary_residual().is_zero());
        assert!(k.c_boundary_residual().is_zero());
    }

    #[test]
    fn operator_lb_round() {
        assert_eq!(pinched_operator_lb(&Num::int(1), &Num::int(1), 7).unwrap(), Num::int(1));
        assert!(pinched_operator_lb(&Num::zero(), &Num::int(1), 7).is_err());
        assert!(pinched_operator_lb(&Num::int(2), &Num::int(1), 7).is_err());
    }

    #[test]
    fn two_form_lb_at_c() {
        for m in 6..30 {
            let c = Num::Exact(c_constant(m).unwrap());
            assert!(two_form_pinched_lb(&Num::int(1), &c, m).unwrap().is_zero());
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(sphere_beta(3, 6).unwrap(), rat(15, 2));
        assert_eq!(sphere_beta(3, 7).unwrap(), rat(19, 2));
        assert_eq!(sphere_beta(4, 9).unwrap(), rat(29, 3));
        assert_eq!(
            beta_bound(6, 3, &Num::int(1), &Num::int(6)).unwrap(),
            Num::ratio(15, 2)
        );
        assert_eq!(large_beta_dims(4..=40), vec![4, 5, 6, 7, 9]);
        assert!(beta_bound(6, 1, &Num::int(1), &Num::int(6)).is_err());
    }
}
