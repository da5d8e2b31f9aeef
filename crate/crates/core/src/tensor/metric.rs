use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TensorError;
use crate::dual::{Jet2, Real};
use crate::linalg::{sym_eigenvalues, SquareMatrix};

/// Largest accepted condition number of the metric matrix.
pub const MAX_CONDITION: f64 = 1e12;
const SYMMETRY_TOL: f64 = 1e-12;

/// A point of a coordinate chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    pub coords: Vec<f64>,
    pub chart_id: String,
}

impl ChartPoint {
    pub fn new(chart_id: impl Into<String>, coords: Vec<f64>) -> Self {
        ChartPoint {
            coords,
            chart_id: chart_id.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Open box `∏ (lo_i, hi_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxDomain {
    pub bounds: Vec<(f64, f64)>,
}

impl BoxDomain {
    pub fn cube(dim: usize, half_width: f64) -> Self {
        BoxDomain {
            bounds: vec![(-half_width, half_width); dim],
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.bounds.len()
            && x.iter().zip(&self.bounds).all(|(v, (lo, hi))| lo < v && v < hi)
    }

    /// Product of boxes, coordinates concatenated.
    pub fn product(parts: &[&BoxDomain]) -> Self {
        BoxDomain {
            bounds: parts.iter().flat_map(|d| d.bounds.iter().copied()).collect(),
        }
    }
}

/// Metric components as a function of chart coordinates.
///
/// Implementations return the `m × m` matrix in row-major order and must be
/// written with differentiable operations only, so the same code yields exact
/// first and second derivatives on [`Jet2`] inputs.
pub trait MetricComponents: Send + Sync {
    fn dim(&self) -> usize;
    fn components(&self, x: &[Jet2]) -> Vec<Jet2>;
}

struct FnComponents<F> {
    dim: usize,
    f: F,
}

impl<F> MetricComponents for FnComponents<F>
where
    F: Fn(&[Jet2]) -> Vec<Jet2> + Send + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }
    fn components(&self, x: &[Jet2]) -> Vec<Jet2> {
        (self.f)(x)
    }
}

/// A Riemannian metric on a coordinate chart.
#[derive(Clone)]
pub struct MetricField {
    chart_id: String,
    domain: BoxDomain,
    /// Typical coordinate length, used to size finite-difference steps.
    scale: f64,
    inner: Arc<dyn MetricComponents>,
}

impl fmt::Debug for MetricField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MetricField")
            .field("chart_id", &self.chart_id)
            .field("dim", &self.dim())
            .field("domain", &self.domain)
            .finish()
    }
}

/// Metric value and coordinate derivatives at one point.
#[derive(Debug, Clone)]
pub struct MetricJet {
    pub g: SquareMatrix,
    pub g_inv: SquareMatrix,
    /// `dg[k][(i, j)] = ∂_k g_ij`
    pub dg: Vec<SquareMatrix>,
    /// `ddg[k * m + l][(i, j)] = ∂_k ∂_l g_ij`
    pub ddg: Vec<SquareMatrix>,
}

impl MetricField {
    pub fn new(
        chart_id: impl Into<String>,
        domain: BoxDomain,
        inner: Arc<dyn MetricComponents>,
    ) -> Self {
        let scale = domain
            .bounds
            .iter()
            .map(|(lo, hi)| hi - lo)
            .fold(f64::INFINITY, f64::min)
            .min(1.0);
        MetricField {
            chart_id: chart_id.into(),
            domain,
            scale,
            inner,
        }
    }

    /// Wrap a closure over second-order jets.
    pub fn from_fn<F>(chart_id: impl Into<String>, domain: BoxDomain, f: F) -> Self
    where
        F: Fn(&[Jet2]) -> Vec<Jet2> + Send + Sync + 'static,
    {
        let dim = domain.bounds.len();
        Self::new(chart_id, domain, Arc::new(FnComponents { dim, f }))
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn chart_id(&self) -> &str {
        &self.chart_id
    }

    pub fn domain(&self) -> &BoxDomain {
        &self.domain
    }

    pub fn coordinate_scale(&self) -> f64 {
        self.scale
    }

    pub fn components_handle(&self) -> Arc<dyn MetricComponents> {
        self.inner.clone()
    }

    pub fn point(&self, coords: Vec<f64>) -> ChartPoint {
        ChartPoint::new(self.chart_id.clone(), coords)
    }

    fn check_point(&self, p: &ChartPoint) -> Result<(), TensorError> {
        if p.dim() != self.dim() {
            return Err(TensorError::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        if p.chart_id != self.chart_id {
            return Err(TensorError::WrongChart {
                expected: self.chart_id.clone(),
                got: p.chart_id.clone(),
            });
        }
        if !self.domain.contains(&p.coords) {
            return Err(TensorError::OutsideDomain(p.coords.clone()));
        }
        Ok(())
    }

    fn eval_jets(&self, x: &[Jet2]) -> Result<Vec<Jet2>, TensorError> {
        let m = self.dim();
        let out = self.inner.components(x);
        if out.len() != m * m {
            return Err(TensorError::DimensionMismatch {
                expected: m * m,
                got: out.len(),
            });
        }
        Ok(out)
    }

    /// Metric matrix at a raw coordinate vector; no domain check.
    pub fn eval_raw(&self, coords: &[f64]) -> Result<SquareMatrix, TensorError> {
        let x: Vec<Jet2> = coords.iter().map(|&c| Jet2::from_f64(c)).collect();
        let out = self.eval_jets(&x)?;
        let m = self.dim();
        Ok(SquareMatrix::from_fn(m, |i, j| out[i * m + j].value()))
    }

    /// Metric matrix at `p`, validated: symmetric, positive definite and
    /// well conditioned.
    pub fn metric_at(&self, p: &ChartPoint) -> Result<SquareMatrix, TensorError> {
        self.check_point(p)?;
        let g = self.eval_raw(&p.coords)?;
        validate_metric(&g)?;
        Ok(g)
    }

    /// First derivatives `∂_k g_ij` by single dual seeds.
    pub fn first_derivatives(&self, p: &ChartPoint) -> Result<Vec<SquareMatrix>, TensorError> {
        self.check_point(p)?;
        let m = self.dim();
        (0..m)
            .map(|k| {
                let x: Vec<Jet2> = p
                    .coords
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| Jet2::seeded(c, i == k, false))
                    .collect();
                let out = self.eval_jets(&x)?;
                Ok(SquareMatrix::from_fn(m, |i, j| out[i * m + j].d_outer()))
            })
            .collect()
    }

    /// Value, inverse, first and second derivatives at `p`.
    pub fn jet_at(&self, p: &ChartPoint) -> Result<MetricJet, TensorError> {
        let g = self.metric_at(p)?;
        let g_inv = g.inverse().map_err(|_| TensorError::Degenerate {
            condition: f64::INFINITY,
        })?;
        let m = self.dim();
        let mut dg = vec![SquareMatrix::zeros(m); m];
        let mut ddg = vec![SquareMatrix::zeros(m); m * m];
        for k in 0..m {
            for l in k..m {
                let x: Vec<Jet2> = p
                    .coords
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| Jet2::seeded(c, i == k, i == l))
                    .collect();
                let out = self.eval_jets(&x)?;
                let second = SquareMatrix::from_fn(m, |i, j| out[i * m + j].d_mixed());
                if k == l {
                    dg[k] = SquareMatrix::from_fn(m, |i, j| out[i * m + j].d_outer());
                }
                ddg[k * m + l] = second.clone();
                ddg[l * m + k] = second;
            }
        }
        Ok(MetricJet { g, g_inv, dg, ddg })
    }

    /// `count` pseudo-random interior points, deterministic in `seed`.
    /// Points are drawn from the central 80% of each coordinate interval.
    pub fn sample_points(&self, count: usize, seed: u64) -> Vec<ChartPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let coords = self
                    .domain
                    .bounds
                    .iter()
                    .map(|&(lo, hi)| {
                        let mid = 0.5 * (lo + hi);
                        let half = 0.4 * (hi - lo);
                        mid + half * rng.random_range(-1.0..1.0)
                    })
                    .collect();
                self.point(coords)
            })
            .collect()
    }
}

fn validate_metric(g: &SquareMatrix) -> Result<(), TensorError> {
    let asym = g.relative_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(TensorError::NotSymmetric(asym));
    }
    let ev = sym_eigenvalues(g)?;
    let (lo, hi) = (ev[0], ev[ev.len() - 1]);
    if lo.is_nan() || lo <= 0.0 {
        return Err(TensorError::NotPositiveDefinite(lo));
    }
    let condition = hi / lo;
    if condition > MAX_CONDITION {
        return Err(TensorError::Degenerate { condition });
    }
    Ok(())
}
