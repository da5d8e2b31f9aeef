use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::spec::ModelSpec;
use crate::dual::{Jet2, Real};
use crate::exact::to_f64;
use crate::linalg::SquareMatrix;
use crate::tensor::{BoxDomain, MetricComponents, MetricField};

/// Half-width of the coordinate box used by every model chart.
pub const CHART_HALF_WIDTH: f64 = 1.0;

fn diagonal<T: Real>(m: usize, d: T) -> Vec<T> {
    (0..m * m)
        .map(|k| if k / m == k % m { d } else { T::zero() })
        .collect()
}

fn norm2<T: Real>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, &v| acc + v * v)
}

struct Flat {
    dim: usize,
}

impl MetricComponents for Flat {
    fn dim(&self) -> usize {
        self.dim
    }
    fn components(&self, _x: &[Jet2]) -> Vec<Jet2> {
        diagonal(self.dim, Jet2::one())
    }
}

/// Round sphere in stereographic coordinates:
/// `g = 4r² / (1 + |u|²)² · I`.
struct Stereographic {
    dim: usize,
    radius: f64,
}

impl MetricComponents for Stereographic {
    fn dim(&self) -> usize {
        self.dim
    }
    fn components(&self, x: &[Jet2]) -> Vec<Jet2> {
        let s = Jet2::one() + norm2(x);
        let conformal = Jet2::from_f64(4.0 * self.radius * self.radius) / (s * s);
        diagonal(self.dim, conformal)
    }
}

/// Inverse stereographic projection `ℝ^k → S^k ⊂ ℝ^{k+1}` and its partial
/// derivatives `∂_i X`.
fn stereographic_embedding<T: Real>(u: &[T]) -> (Vec<T>, Vec<Vec<T>>) {
    let k = u.len();
    let s = T::one() + norm2(u);
    let inv = T::one() / s;
    let mut x: Vec<T> = u.iter().map(|&ui| ui.scale(2.0) * inv).collect();
    x.push(T::one() - inv.scale(2.0));
    let inv2 = inv * inv;
    let dx = (0..k)
        .map(|i| {
            let mut col: Vec<T> = (0..k)
                .map(|j| {
                    let kron = if i == j { inv.scale(2.0) } else { T::zero() };
                    kron - (u[i] * u[j] * inv2).scale(4.0)
                })
                .collect();
            col.push((u[i] * inv2).scale(4.0));
            col
        })
        .collect();
    (x, dx)
}

/// Complex structure on `ℂ^{n+1} ≅ ℝ^{2n+2}`, pairing coordinates
/// `(2a, 2a+1)` as real and imaginary parts: `J(x, y) = (−y, x)`.
fn apply_j<T: Real>(v: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len());
    for pair in v.chunks(2) {
        out.push(-pair[1]);
        out.push(pair[0]);
    }
    out
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

/// Berger metric `σ + (δ−1) η⊗η` on `S^{2n+1}` in stereographic
/// coordinates, with `η_i = ⟨J X, ∂_i X⟩` the dual of the Reeb field.
struct BergerChart {
    n: usize,
    delta: f64,
}

impl BergerChart {
    fn eval<T: Real>(&self, u: &[T]) -> Vec<T> {
        let m = 2 * self.n + 1;
        let (x, dx) = stereographic_embedding(u);
        let jx = apply_j(&x);
        let eta: Vec<T> = dx.iter().map(|col| dot(&jx, col)).collect();
        let mut g = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let sigma = dot(&dx[i], &dx[j]);
                g.push(sigma + (eta[i] * eta[j]).scale(self.delta - 1.0));
            }
        }
        g
    }
}

impl MetricComponents for BergerChart {
    fn dim(&self) -> usize {
        2 * self.n + 1
    }
    fn components(&self, x: &[Jet2]) -> Vec<Jet2> {
        self.eval(x)
    }
}

/// Fubini–Study metric on `ℂP^n` in inhomogeneous coordinates
/// `z_a = x_{2a} + i x_{2a+1}`:
/// `h_{ab̄} = δ_ab / (1+|z|²) − z̄_a z_b / (1+|z|²)²`, `g = scale · Re h`.
struct FubiniStudyChart {
    n: usize,
    scale: f64,
}

impl MetricComponents for FubiniStudyChart {
    fn dim(&self) -> usize {
        2 * self.n
    }
    fn components(&self, x: &[Jet2]) -> Vec<Jet2> {
        let n = self.n;
        let m = 2 * n;
        let s = Jet2::one() + norm2(x);
        let inv = Jet2::one() / s;
        let inv2 = inv * inv;
        let mut g = vec![Jet2::zero(); m * m];
        for a in 0..n {
            for b in 0..n {
                let (xa, ya) = (x[2 * a], x[2 * a + 1]);
                let (xb, yb) = (x[2 * b], x[2 * b + 1]);
                // z̄_a z_b = (xa xb + ya yb) + i (xa yb − ya xb)
                let re_p = xa * xb + ya * yb;
                let im_p = xa * yb - ya * xb;
                let kron = if a == b { inv } else { Jet2::zero() };
                let hr = (kron - re_p * inv2).scale(self.scale);
                let hi = (-(im_p * inv2)).scale(self.scale);
                g[(2 * a) * m + 2 * b] = hr;
                g[(2 * a + 1) * m + 2 * b + 1] = hr;
                g[(2 * a) * m + 2 * b + 1] = hi;
                g[(2 * a + 1) * m + 2 * b] = -hi;
            }
        }
        g
    }
}

/// Block-diagonal product metric.
struct ProductChart {
    parts: Vec<Arc<dyn MetricComponents>>,
}

impl MetricComponents for ProductChart {
    fn dim(&self) -> usize {
        self.parts.iter().map(|p| p.dim()).sum()
    }
    fn components(&self, x: &[Jet2]) -> Vec<Jet2> {
        let m = self.dim();
        let mut g = vec![Jet2::zero(); m * m];
        let mut offset = 0;
        for p in &self.parts {
            let d = p.dim();
            let block = p.components(&x[offset..offset + d]);
            for i in 0..d {
                for j in 0..d {
                    g[(offset + i) * m + offset + j] = block[i * d + j];
                }
            }
            offset += d;
        }
        g
    }
}

fn components_for(spec: &ModelSpec) -> Arc<dyn MetricComponents> {
    match spec {
        ModelSpec::Euclidean(m) => Arc::new(Flat { dim: *m }),
        ModelSpec::RoundSphere { dim, radius } => Arc::new(Stereographic {
            dim: *dim,
            radius: to_f64(radius),
        }),
        ModelSpec::BergerSphere { n, delta } => Arc::new(BergerChart {
            n: *n,
            delta: to_f64(delta),
        }),
        ModelSpec::FubiniStudyCP { n, scale } => Arc::new(FubiniStudyChart {
            n: *n,
            scale: to_f64(scale),
        }),
        ModelSpec::Product(fs) => Arc::new(ProductChart {
            parts: fs.iter().map(components_for).collect(),
        }),
    }
}

/// Coordinate chart of a model space on the box `(−1, 1)^m`.
///
/// Spheres and Berger spheres use stereographic coordinates from the pole
/// `(0, …, 0, 1)`; `ℂP^n` uses inhomogeneous coordinates; products use
/// concatenated coordinates with a block-diagonal metric.
pub fn chart(spec: &ModelSpec) -> MetricField {
    MetricField::new(
        spec.to_string(),
        BoxDomain::cube(spec.dim(), CHART_HALF_WIDTH),
        components_for(spec),
    )
}

/// Coordinate components of distinguished tangent vectors of the Berger
/// sphere at a chart point: the unit Reeb vector `ξ̂`, a unit horizontal
/// `X`, `JX`, and a unit horizontal `Y ⟂ X, JX`.
#[derive(Debug, Clone)]
pub struct BergerFrame {
    pub xi_hat: Vec<f64>,
    pub x: Vec<f64>,
    pub jx: Vec<f64>,
    pub y: Vec<f64>,
}

/// Build a [`BergerFrame`] at `u`; the horizontal vectors are drawn from a
/// generator seeded with `seed`.
pub fn berger_frame(n: usize, delta: f64, u: &[f64], seed: u64) -> BergerFrame {
    let (p, dx) = stereographic_embedding(u);
    let m = 2 * n + 1;
    let sigma = SquareMatrix::from_fn(m, |i, j| dot(&dx[i], &dx[j]));
    let sigma_inv = sigma.inverse().expect("stereographic metric is invertible");
    // ambient tangent vector w ↦ coordinate vector σ⁻¹ (∂X)ᵀ w
    let to_coords = |w: &[f64]| -> Vec<f64> {
        let rhs: Vec<f64> = dx.iter().map(|col| dot(col, w)).collect();
        sigma_inv.mul_vec(&rhs)
    };
    let jp = apply_j(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_orthogonal = |against: &[Vec<f64>]| -> Vec<f64> {
        let mut w: Vec<f64> = (0..p.len()).map(|_| rng.random_range(-1.0..1.0)).collect();
        for _ in 0..2 {
            for a in against {
                let c = dot(&w, a) / dot(a, a);
                w.iter_mut().zip(a).for_each(|(wi, ai)| *wi -= c * ai);
            }
        }
        let norm = dot(&w, &w).sqrt();
        w.iter_mut().for_each(|wi| *wi /= norm);
        w
    };
    let x = random_orthogonal(&[p.clone(), jp.clone()]);
    let jx = apply_j(&x);
    let y = random_orthogonal(&[p.clone(), jp.clone(), x.clone(), jx.clone()]);
    let xi_hat: Vec<f64> = jp.iter().map(|v| v / delta.sqrt()).collect();
    BergerFrame {
        xi_hat: to_coords(&xi_hat),
        x: to_coords(&x),
        jx: to_coords(&jx),
        y: to_coords(&y),
    }
}
