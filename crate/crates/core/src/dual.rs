//! Forward-mode dual numbers.
//!
//! `Dual<T>` carries a value and one directional derivative. Nesting gives
//! second derivatives: evaluating a function on [`Jet2`] inputs seeded along
//! coordinates `k` (outer) and `l` (inner) yields `f`, `∂_l f`, `∂_k f` and
//! `∂_k ∂_l f` in a single pass, exact to roundoff.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar operations needed by metric component functions.
pub trait Real:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    /// The underlying real value with all infinitesimal parts dropped.
    fn value(&self) -> f64;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn powi(self, n: i32) -> Self {
        if n < 0 {
            return Self::one() / self.powi(-n);
        }
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }

    fn scale(self, c: f64) -> Self {
        self * Self::from_f64(c)
    }
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn value(&self) -> f64 {
        *self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

/// `re + du·ε` with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<T> {
    pub re: T,
    pub du: T,
}

/// Second-order jet: a dual number over dual numbers.
pub type Jet2 = Dual<Dual<f64>>;

impl<T: Real> Dual<T> {
    pub fn new(re: T, du: T) -> Self {
        Dual { re, du }
    }

    pub fn constant(re: T) -> Self {
        Dual { re, du: T::zero() }
    }

    pub fn variable(re: T) -> Self {
        Dual { re, du: T::one() }
    }

    // f(re + du ε) = f(re) + f'(re) du ε
    fn chain(self, f: T, df: T) -> Self {
        Dual {
            re: f,
            du: df * self.du,
        }
    }
}

impl<T: Real> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.re + rhs.re, self.du + rhs.du)
    }
}

impl<T: Real> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.re - rhs.re, self.du - rhs.du)
    }
}

impl<T: Real> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Dual::new(self.re * rhs.re, self.du * rhs.re + self.re * rhs.du)
    }
}

impl<T: Real> Div for Dual<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = T::one() / rhs.re;
        Dual::new(
            self.re * inv,
            (self.du * rhs.re - self.re * rhs.du) * inv * inv,
        )
    }
}

impl<T: Real> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual::new(-self.re, -self.du)
    }
}

impl<T: Real> Real for Dual<T> {
    fn from_f64(x: f64) -> Self {
        Dual::constant(T::from_f64(x))
    }
    fn value(&self) -> f64 {
        self.re.value()
    }
    fn sqrt(self) -> Self {
        let s = self.re.sqrt();
        self.chain(s, T::from_f64(0.5) / s)
    }
    fn sin(self) -> Self {
        self.chain(self.re.sin(), self.re.cos())
    }
    fn cos(self) -> Self {
        self.chain(self.re.cos(), -self.re.sin())
    }
    fn exp(self) -> Self {
        let e = self.re.exp();
        self.chain(e, e)
    }
    fn ln(self) -> Self {
        self.chain(self.re.ln(), T::one() / self.re)
    }
}

impl Jet2 {
    /// Coordinate `x` seeded along the outer direction (`outer`) and the
    /// inner direction (`inner`).
    pub fn seeded(x: f64, outer: bool, inner: bool) -> Self {
        let b = |flag: bool| if flag { 1.0 } else { 0.0 };
        Dual::new(Dual::new(x, b(inner)), Dual::new(b(outer), 0.0))
    }

    /// Derivative along the inner seed.
    pub fn d_inner(&self) -> f64 {
        self.re.du
    }

    /// Derivative along the outer seed.
    pub fn d_outer(&self) -> f64 {
        self.du.re
    }

    /// Mixed second derivative.
    pub fn d_mixed(&self) -> f64 {
        self.du.du
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f<T: Real>(x: T, y: T) -> T {
        x * x * y + (x * y).sin() / (T::one() + y * y).sqrt()
    }

    #[test]
    fn first_derivative_of_polynomial() {
        let x = Dual::variable(3.0);
        let y = x * x + Dual::from_f64(2.0) * x;
        assert_eq!(y.re, 15.0);
        assert_eq!(y.du, 8.0);
    }

    #[test]
    fn quotient_and_transcendentals() {
        let x = Dual::variable(0.7_f64);
        let y = x.exp() / x.cos() + x.ln();
        let expect = (0.7_f64.exp() * 0.7_f64.cos() + 0.7_f64.exp() * 0.7_f64.sin())
            / 0.7_f64.cos().powi(2)
            + 1.0 / 0.7;
        assert!((y.du - expect).abs() < 1e-13);
    }

    #[test]
    fn jet_matches_central_differences() {
        let (x0, y0) = (0.4, -1.3);
        let jx = Jet2::seeded(x0, true, false);
        let jy = Jet2::seeded(y0, false, true);
        let out = f(jx, jy);
        let h = 1e-4;
        let fx = (f(x0 + h, y0) - f(x0 - h, y0)) / (2.0 * h);
        let fy = (f(x0, y0 + h) - f(x0, y0 - h)) / (2.0 * h);
        let fxy = (f(x0 + h, y0 + h) - f(x0 + h, y0 - h) - f(x0 - h, y0 + h)
            + f(x0 - h, y0 - h))
            / (4.0 * h * h);
        assert!((out.value() - f(x0, y0)).abs() < 1e-14);
        assert!((out.d_outer() - fx).abs() < 1e-7);
        assert!((out.d_inner() - fy).abs() < 1e-7);
        assert!((out.d_mixed() - fxy).abs() < 1e-6);
    }

    #[test]
    fn powi_negative() {
        let x = Dual::variable(2.0_f64);
        let y = x.powi(-2);
        assert!((y.re - 0.25).abs() < 1e-15);
        assert!((y.du + 0.25).abs() < 1e-15);
    }
}
