//! Exact rationals and the mixed exact/float quantity used for margins.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

/// Tolerance for treating a float as zero (e.g. `H = 0` for float profiles).
pub const FLOAT_ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse `{0}` as a number")]
pub struct NumberParseError(pub String);

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `7`, `-2/3`, `1.25` or `.5` exactly. Exponent notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, NumberParseError> {
    let err = || NumberParseError(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| err())?
    };
    let d = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(n, d);
    Ok(if neg { -r } else { r })
}

/// `num/den` for non-integers, `num` for integers.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Float rendering at 12 significant digits, trailing zeros trimmed.
pub fn render_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

/// Serde adapter storing a rational as the string `num/den`.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<Rational>`.
pub mod opt_rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => rational_string::serialize(r, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// A real quantity that is exact when all of its inputs were exact.
///
/// Arithmetic between two exact values stays exact; anything touching a
/// float becomes a float.
#[derive(Debug, Clone, PartialEq)]
pub enum Num {
    Exact(Rational),
    Approx(f64),
}

impl Num {
    pub fn int(n: i64) -> Self {
        Num::Exact(int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Num::Exact(rat(n, d))
    }

    pub fn zero() -> Self {
        Num::int(0)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Num::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Num::Exact(r) => to_f64(r),
            Num::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Num::Exact(r) => Some(r),
            Num::Approx(_) => None,
        }
    }

    /// Exact zero test for rationals, `|x| < 1e-12` for floats.
    pub fn is_zero(&self) -> bool {
        match self {
            Num::Exact(r) => r.is_zero(),
            Num::Approx(x) => x.abs() < FLOAT_ZERO_TOL,
        }
    }

    /// Sign, with floats inside `FLOAT_ZERO_TOL` counted as zero.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else {
            self.cmp_num(&Num::zero())
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn square(&self) -> Num {
        self * self
    }

    pub fn abs(&self) -> Num {
        match self {
            Num::Exact(r) => Num::Exact(r.abs()),
            Num::Approx(x) => Num::Approx(x.abs()),
        }
    }

    /// Total order; exact when both sides are exact, float comparison
    /// otherwise (NaN sorts last).
    pub fn cmp_num(&self, other: &Num) -> Ordering {
        match (self, other) {
            (Num::Exact(a), Num::Exact(b)) => a.cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }

    pub fn max(self, other: Num) -> Num {
        if other.cmp_num(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Num) -> Num {
        if other.cmp_num(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn parse(text: &str) -> Result<Num, NumberParseError> {
        match parse_rational(text) {
            Ok(r) => Ok(Num::Exact(r)),
            Err(e) => f64::from_str(text.trim())
                .ok()
                .filter(|x| x.is_finite())
                .map(Num::Approx)
                .ok_or(e),
        }
    }
}

impl From<Rational> for Num {
    fn from(r: Rational) -> Self {
        Num::Exact(r)
    }
}

impl From<f64> for Num {
    fn from(x: f64) -> Self {
        Num::Approx(x)
    }
}

impl From<i64> for Num {
    fn from(n: i64) -> Self {
        Num::int(n)
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Exact(r) => f.write_str(&render(r)),
            Num::Approx(x) => f.write_str(&render_float(*x)),
        }
    }
}

macro_rules! num_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a Num> for &'a Num {
            type Output = Num;
            fn $method(self, rhs: &'a Num) -> Num {
                match (self, rhs) {
                    (Num::Exact(a), Num::Exact(b)) => Num::Exact(a $op b),
                    _ => Num::Approx(self.to_f64() $op rhs.to_f64()),
                }
            }
        }

        impl $trait for Num {
            type Output = Num;
            fn $method(self, rhs: Num) -> Num {
                &self $op &rhs
            }
        }

        impl<'a> $trait<&'a Num> for Num {
            type Output = Num;
            fn $method(self, rhs: &'a Num) -> Num {
                &self $op rhs
            }
        }
    };
}

num_binop!(Add, add, +);
num_binop!(Sub, sub, -);
num_binop!(Mul, mul, *);

impl<'a> Div<&'a Num> for &'a Num {
    type Output = Num;
    fn div(self, rhs: &'a Num) -> Num {
        match (self, rhs) {
            (Num::Exact(a), Num::Exact(b)) if !b.is_zero() => Num::Exact(a / b),
            _ => Num::Approx(self.to_f64() / rhs.to_f64()),
        }
    }
}

impl Div for Num {
    type Output = Num;
    fn div(self, rhs: Num) -> Num {
        &self / &rhs
    }
}

impl Neg for Num {
    type Output = Num;
    fn neg(self) -> Num {
        match self {
            Num::Exact(r) => Num::Exact(-r),
            Num::Approx(x) => Num::Approx(-x),
        }
    }
}

impl std::iter::Sum for Num {
    fn sum<I: Iterator<Item = Num>>(iter: I) -> Num {
        iter.fold(Num::zero(), |a, b| a + b)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Num::Exact(r) => rational_string::serialize(r, s),
            Num::Approx(x) => s.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Num, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Text(String),
            Float(f64),
        }
        match Wire::deserialize(d)? {
            Wire::Text(t) => parse_rational(&t)
                .map(Num::Exact)
                .map_err(serde::de::Error::custom),
            Wire::Float(x) => Ok(Num::Approx(x)),
        }
    }
}

/// `1` as a rational.
pub fn one() -> Rational {
    Rational::one()
}
