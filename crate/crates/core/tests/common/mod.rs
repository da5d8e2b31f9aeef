//! Independent oracles for the integration tests.
//!
//! Nothing here calls the fast paths it is used to check: subset extremes
//! are enumerated, derivatives are central differences, and product
//! spectra are assembled as block matrices and diagonalised with nalgebra.

#![allow(dead_code)]

pub mod props;

use curvgate::exact::{rat, Rational};
use curvgate::model::chart;
use curvgate::{CurvatureReport, ModelSpec, Num, PrincipalCurvatureProfile};
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact extremes over all `|α| = p`, by enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForce {
    pub max_k2: Rational,
    pub min_cmc: Rational,
}

pub fn brute_force(k: &[Rational], p: usize) -> BruteForce {
    let m = k.len();
    let h: Rational = k.iter().cloned().sum();
    let mut max_k2: Option<Rational> = None;
    let mut min_cmc: Option<Rational> = None;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let ka: Rational = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| k[i].clone()).sum();
        let k2 = &ka * &ka;
        let q = &ka * (&h - &ka);
        if max_k2.as_ref().is_none_or(|b| k2 > *b) {
            max_k2 = Some(k2);
        }
        if min_cmc.as_ref().is_none_or(|b| q < *b) {
            min_cmc = Some(q);
        }
    }
    BruteForce {
        max_k2: max_k2.expect("p in range"),
        min_cmc: min_cmc.expect("p in range"),
    }
}

pub fn norm2(k: &[Rational]) -> Rational {
    k.iter().map(|x| x * x).sum()
}

/// Seeded rational profile of length `m`; minimal when `minimal` is set
/// (last entry balances the sum).
pub fn random_profile(rng: &mut ChaCha8Rng, m: usize, minimal: bool) -> Vec<Rational> {
    let mut k: Vec<Rational> = (0..m)
        .map(|_| {
            if rng.random_bool(0.2) {
                Rational::zero()
            } else {
                rat(rng.random_range(-9..=9), rng.random_range(1..=4))
            }
        })
        .collect();
    if minimal {
        let rest: Rational = k[..m - 1].iter().cloned().sum();
        k[m - 1] = -rest;
    }
    k
}

pub fn profile_of(k: &[Rational]) -> PrincipalCurvatureProfile {
    PrincipalCurvatureProfile::new(k.iter().cloned().map(Num::Exact).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Central-difference first derivatives `∂_k g_ij` with `h = 1e-4·scale`.
pub fn fd_first_derivatives(spec: &ModelSpec, coords: &[f64]) -> Vec<Vec<Vec<f64>>> {
    let metric = chart(spec);
    let h = 1e-4 * metric.coordinate_scale();
    let m = coords.len();
    (0..m)
        .map(|k| {
            let mut plus = coords.to_vec();
            let mut minus = coords.to_vec();
            plus[k] += h;
            minus[k] -= h;
            let gp = metric.eval_raw(&plus).unwrap();
            let gm = metric.eval_raw(&minus).unwrap();
            (0..m)
                .map(|i| (0..m).map(|j| (gp[(i, j)] - gm[(i, j)]) / (2.0 * h)).collect())
                .collect()
        })
        .collect()
}

/// Curvature operator of a product, assembled block-diagonally from the
/// numeric operators of its factors plus a zero block for mixed
/// bivectors, then diagonalised by nalgebra.
pub fn block_assembled_spectrum(factors: &[ModelSpec], seed: u64) -> Vec<f64> {
    let blocks: Vec<DMatrix<f64>> = factors
        .iter()
        .map(|f| {
            let metric = chart(f);
            let p = metric.sample_points(1, seed).remove(0);
            let rep = CurvatureReport::at(&metric, &p).unwrap();
            let op = &rep.operator.matrix;
            let n = op.dim();
            DMatrix::from_fn(n, n, |i, j| op[(i, j)])
        })
        .collect();
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    let total_dim: usize = dims.iter().sum();
    let total = total_dim * (total_dim - 1) / 2;
    let mut big = DMatrix::<f64>::zeros(total, total);
    let mut offset = 0;
    for b in &blocks {
        let n = b.nrows();
        big.view_mut((offset, offset), (n, n)).copy_from(b);
        offset += n;
    }
    let mut eig: Vec<f64> = big.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Expanded exact spectrum as floats.
pub fn expand(values: &[(Rational, usize)]) -> Vec<f64> {
    let mut out: Vec<f64> = values
        .iter()
        .flat_map(|(v, k)| std::iter::repeat_n(v.to_f64().unwrap(), *k))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Largest absolute difference between two ascending lists.
pub fn max_deviation(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter().zip(b).fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
}

/// Berger closed form written out directly: curvature-operator eigenvalues
/// `δ` (mult. n(n+1)), `2−δ` (mult. n²−1), `2n+2−(2n+1)δ` (mult. 1).
pub fn berger_expected_spectrum(n: usize, delta: &Rational) -> Vec<(Rational, usize)> {
    let nn = n as i64;
    vec![
        (delta.clone(), n * (n + 1)),
        (rat(2, 1) - delta, n * n - 1),
        (rat(2 * nn + 2, 1) - rat(2 * nn + 1, 1) * delta, 1),
    ]
}

pub fn berger_expected_ricci(n: usize, delta: &Rational) -> Vec<(Rational, usize)> {
    let nn = n as i64;
    vec![
        (rat(2 * nn, 1) * delta, 1),
        (rat(2 * nn + 2, 1) - rat(2, 1) * delta, 2 * n),
    ]
}

pub fn berger_expected_scalar(n: usize, delta: &Rational) -> Rational {
    let nn = n as i64;
    rat(2 * nn, 1) * (rat(2 * nn + 2, 1) - delta)
}
