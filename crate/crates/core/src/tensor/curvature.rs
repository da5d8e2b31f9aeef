use serde::{Deserialize, Serialize};

use super::metric::{ChartPoint, MetricField, MetricJet};
use super::TensorError;
use crate::linalg::{orthonormal_frame, sym_eigenvalues, SquareMatrix};

/// Christoffel symbols of the second kind, `Γ^k_{ij}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Christoffel {
    dim: usize,
    data: Vec<f64>,
}

impl Christoffel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ^k_{ij}`
    pub fn get(&self, k: usize, i: usize, j: usize) -> f64 {
        let m = self.dim;
        self.data[(k * m + i) * m + j]
    }

    fn from_jet(jet: &MetricJet) -> Self {
        let m = jet.g.dim();
        // first kind: Γ_{l,ij} = ½(∂_i g_jl + ∂_j g_il − ∂_l g_ij)
        let first = |l: usize, i: usize, j: usize| {
            0.5 * (jet.dg[i][(j, l)] + jet.dg[j][(i, l)] - jet.dg[l][(i, j)])
        };
        let mut data = vec![0.0; m * m * m];
        for k in 0..m {
            for i in 0..m {
                for j in i..m {
                    let v: f64 = (0..m).map(|l| jet.g_inv[(k, l)] * first(l, i, j)).sum();
                    data[(k * m + i) * m + j] = v;
                    data[(k * m + j) * m + i] = v;
                }
            }
        }
        Christoffel { dim: m, data }
    }
}

/// Frame in which tensor components are expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Coordinate,
    Orthonormal,
}

/// Fully covariant Riemann tensor `R_{ijkl}`.
///
/// Sign convention: `R_{ijij} = sec(e_i, e_j)` for an orthonormal pair, so the
/// unit round sphere has `R_{ijij} = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RiemannTensor {
    pub point: ChartPoint,
    pub frame: Frame,
    dim: usize,
    data: Vec<f64>,
}

impl RiemannTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let m = self.dim;
        ((i * m + j) * m + k) * m + l
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.data[self.idx(i, j, k, l)]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, x| a.max(x.abs()))
    }

    /// Build a tensor from an explicit component function (frame as given).
    pub fn from_fn(
        point: ChartPoint,
        frame: Frame,
        dim: usize,
        f: impl Fn(usize, usize, usize, usize) -> f64,
    ) -> Self {
        let mut data = vec![0.0; dim.pow(4)];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        data[((i * dim + j) * dim + k) * dim + l] = f(i, j, k, l);
                    }
                }
            }
        }
        RiemannTensor {
            point,
            frame,
            dim,
            data,
        }
    }

    /// Worst violation of antisymmetry, pair symmetry and the first Bianchi
    /// identity, divided by the largest component (0 for a flat tensor).
    pub fn symmetry_defect(&self) -> f64 {
        let m = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let r = self.get(i, j, k, l);
                        worst = worst
                            .max((r + self.get(j, i, k, l)).abs())
                            .max((r + self.get(i, j, l, k)).abs())
                            .max((r - self.get(k, l, i, j)).abs())
                            .max((r + self.get(i, k, l, j) + self.get(i, l, j, k)).abs());
                    }
                }
            }
        }
        let scale = self.max_abs();
        if scale == 0.0 {
            worst
        } else {
            worst / scale
        }
    }

    /// Components in the frame whose vectors are the columns of `e`.
    pub fn in_frame(&self, e: &SquareMatrix) -> RiemannTensor {
        let m = self.dim;
        // contract one index at a time: O(m^5)
        let mut cur = self.data.clone();
        for slot in 0..4 {
            let mut next = vec![0.0; cur.len()];
            let stride = m.pow(3 - slot as u32);
            for (pos, out) in next.iter_mut().enumerate() {
                let a = (pos / stride) % m;
                let base = pos - a * stride;
                *out = (0..m).map(|i| e[(i, a)] * cur[base + i * stride]).sum();
            }
            cur = next;
        }
        RiemannTensor {
            point: self.point.clone(),
            frame: Frame::Orthonormal,
            dim: m,
            data: cur,
        }
    }
}

/// Levi-Civita connection coefficients at `p`.
pub fn christoffel(metric: &MetricField, p: &ChartPoint) -> Result<Christoffel, TensorError> {
    let g = metric.metric_at(p)?;
    let g_inv = g.inverse().map_err(|_| TensorError::Degenerate {
        condition: f64::INFINITY,
    })?;
    let dg = metric.first_derivatives(p)?;
    let m = g.dim();
    let jet = MetricJet {
        g,
        g_inv,
        dg,
        ddg: Vec::with_capacity(m),
    };
    Ok(Christoffel::from_jet(&jet))
}

fn riemann_from_jet(point: ChartPoint, jet: &MetricJet) -> RiemannTensor {
    let m = jet.g.dim();
    let gamma = Christoffel::from_jet(jet);
    let dd = |a: usize, b: usize, i: usize, j: usize| jet.ddg[a * m + b][(i, j)];
    // Γ_{p,il} lowered with g: g_np Γ^n_jk Γ^p_il
    let mut lowered = vec![0.0; m * m * m];
    for p in 0..m {
        for i in 0..m {
            for l in 0..m {
                lowered[(p * m + i) * m + l] =
                    (0..m).map(|q| jet.g[(p, q)] * gamma.get(q, i, l)).sum();
            }
        }
    }
    let gg = |j: usize, k: usize, i: usize, l: usize| -> f64 {
        (0..m)
            .map(|p| gamma.get(p, j, k) * lowered[(p * m + i) * m + l])
            .sum()
    };
    RiemannTensor::from_fn(point, Frame::Coordinate, m, |i, j, k, l| {
        0.5 * (dd(j, k, i, l) + dd(i, l, j, k) - dd(i, k, j, l) - dd(j, l, i, k))
            + gg(j, k, i, l)
            - gg(j, l, i, k)
    })
}

/// Covariant Riemann tensor in the coordinate frame at `p`.
pub fn riemann(metric: &MetricField, p: &ChartPoint) -> Result<RiemannTensor, TensorError> {
    let jet = metric.jet_at(p)?;
    Ok(riemann_from_jet(p.clone(), &jet))
}

fn metric_for_frame(r: &RiemannTensor, g: &SquareMatrix) -> SquareMatrix {
    match r.frame {
        Frame::Coordinate => g.clone(),
        Frame::Orthonormal => SquareMatrix::identity(r.dim()),
    }
}

/// Sectional curvature of the plane spanned by `u` and `v` (components in
/// the tensor's frame; `g` is the metric in the coordinate frame).
pub fn sectional(
    r: &RiemannTensor,
    g: &SquareMatrix,
    u: &[f64],
    v: &[f64],
) -> Result<f64, TensorError> {
    let m = r.dim();
    if u.len() != m || v.len() != m {
        return Err(TensorError::DimensionMismatch {
            expected: m,
            got: u.len().min(v.len()),
        });
    }
    let g = metric_for_frame(r, g);
    let uu = g.bilinear(u, u);
    let vv = g.bilinear(v, v);
    let uv = g.bilinear(u, v);
    let gram = uu * vv - uv * uv;
    if gram <= 1e-10 * (uu * vv).max(f64::MIN_POSITIVE) {
        return Err(TensorError::DegeneratePlane(gram));
    }
    let mut num = 0.0;
    for i in 0..m {
        for j in 0..m {
            let a = u[i] * v[j];
            if a == 0.0 {
                continue;
            }
            for (k, uk) in u.iter().enumerate() {
                for (l, vl) in v.iter().enumerate() {
                    num += a * uk * vl * r.get(i, j, k, l);
                }
            }
        }
    }
    Ok(num / gram)
}

/// Ricci tensor `Ric_{jl} = g^{ik} R_{ijkl}` and scalar curvature.
pub fn ricci_and_scalar(r: &RiemannTensor, g: &SquareMatrix) -> Result<(SquareMatrix, f64), TensorError> {
    let m = r.dim();
    let g = metric_for_frame(r, g);
    let g_inv = g.inverse().map_err(|_| TensorError::Degenerate {
        condition: f64::INFINITY,
    })?;
    let ric = SquareMatrix::from_fn(m, |j, l| {
        let mut s = 0.0;
        for i in 0..m {
            for k in 0..m {
                s += g_inv[(i, k)] * r.get(i, j, k, l);
            }
        }
        s
    });
    let ric = SquareMatrix::from_fn(m, |i, j| 0.5 * (ric[(i, j)] + ric[(j, i)]));
    let scalar = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| g_inv[(i, j)] * ric[(i, j)])
        .sum();
    Ok((ric, scalar))
}

/// Ordered bivector basis `e_i ∧ e_j`, `i < j`, lexicographic.
pub fn bivector_basis(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .collect()
}

/// Curvature operator on `Λ²` in the lexicographic orthonormal bivector
/// basis.
#[derive(Debug, Clone)]
pub struct CurvatureOperatorMatrix {
    pub point: ChartPoint,
    pub matrix: SquareMatrix,
    pub basis: Vec<(usize, usize)>,
}

impl CurvatureOperatorMatrix {
    pub fn eigenvalues(&self) -> Result<Vec<f64>, TensorError> {
        Ok(sym_eigenvalues(&self.matrix)?)
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }
}

/// Curvature operator with entries `⟨R(e_i∧e_j), e_k∧e_l⟩ = R_{ijkl}` in an
/// orthonormal frame obtained by Gram–Schmidt on the coordinate frame.
/// Normalized so the unit round sphere gives the identity.
pub fn curvature_operator(
    r: &RiemannTensor,
    g: &SquareMatrix,
) -> Result<CurvatureOperatorMatrix, TensorError> {
    let on = match r.frame {
        Frame::Orthonormal => r.clone(),
        Frame::Coordinate => {
            let e = orthonormal_frame(g).map_err(|_| TensorError::FrameConstruction)?;
            r.in_frame(&e)
        }
    };
    let basis = bivector_basis(r.dim());
    let n = basis.len();
    let matrix = SquareMatrix::from_fn(n, |a, b| {
        let (i, j) = basis[a];
        let (k, l) = basis[b];
        on.get(i, j, k, l)
    });
    // pair symmetry holds only to roundoff
    let matrix = SquareMatrix::from_fn(n, |a, b| 0.5 * (matrix[(a, b)] + matrix[(b, a)]));
    Ok(CurvatureOperatorMatrix {
        point: r.point.clone(),
        matrix,
        basis,
    })
}

/// Curvature data at one point.
#[derive(Debug, Clone)]
pub struct CurvatureReport {
    pub point: ChartPoint,
    pub metric: SquareMatrix,
    pub riemann: RiemannTensor,
    pub ricci: SquareMatrix,
    pub scalar: f64,
    pub operator: CurvatureOperatorMatrix,
    /// Ascending eigenvalues of the curvature operator.
    pub spectrum: Vec<f64>,
}

impl CurvatureReport {
    pub fn at(metric: &MetricField, p: &ChartPoint) -> Result<Self, TensorError> {
        let jet = metric.jet_at(p)?;
        let riemann = riemann_from_jet(p.clone(), &jet);
        let (ricci, scalar) = ricci_and_scalar(&riemann, &jet.g)?;
        let operator = curvature_operator(&riemann, &jet.g)?;
        let spectrum = operator.eigenvalues()?;
        Ok(CurvatureReport {
            point: p.clone(),
            metric: jet.g,
            riemann,
            ricci,
            scalar,
            operator,
            spectrum,
        })
    }

    /// Eigenvalues of the Ricci tensor with respect to the metric
    /// (ascending).
    pub fn ricci_eigenvalues(&self) -> Result<Vec<f64>, TensorError> {
        let e = orthonormal_frame(&self.metric).map_err(|_| TensorError::FrameConstruction)?;
        let r = e.transpose().matmul(&self.ricci).matmul(&e);
        let r = SquareMatrix::from_fn(r.dim(), |i, j| 0.5 * (r[(i, j)] + r[(j, i)]));
        Ok(sym_eigenvalues(&r)?)
    }
}
