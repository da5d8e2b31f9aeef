//! Property checks. Each returns a short summary on success and a
//! description of the first counterexample on failure, so the same code
//! backs both the per-property tests and the acceptance runner.

use curvgate::exact::{int, rat, Rational};
use curvgate::hypothesis::{
    check_cmc_condition, check_minimal_condition, hodge_verdicts, large_beta_dims, sphere_beta,
    spinor_rank_bound, zeropp_sufficient, AssertedFlags, ZeroppShortcut,
};
use curvgate::model::{chart, closed_form_summary, verify_model};
use curvgate::report::{analyze, AmbientSource, OutputFormat, ProfileSource};
use curvgate::tensor::sectional;
use curvgate::{
    AmbientSummary, AnalysisRequest, CurvatureReport, ModelSpec, Num, PrincipalCurvatureProfile,
    ReportDocument,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use super::{brute_force, fd_first_derivatives, norm2, profile_of, random_profile, rng};

pub type Outcome = Result<String, String>;
pub type Property = (&'static str, fn() -> Outcome);

const SEED: u64 = 0x5eed_cafe;

fn runner(cases: u32) -> TestRunner {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&SEED.to_le_bytes());
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &seed),
    )
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// Every chart shipped with the crate, one or two instances per family.
pub fn shipped_models() -> Vec<ModelSpec> {
    [
        "E4",
        "S2(r=1)",
        "S3(r=2)",
        "S5(r=1)",
        "Berger(n=2,delta=1/2)",
        "Berger(n=2,delta=6/5)",
        "Berger(n=3,delta=3/2)",
        "CP2",
        "CP3(scale=2)",
        "S2xR3",
        "S3xR2",
        "S2xS2",
        "S2(r=1)xS3(r=3/2)",
        "CP2xR2",
    ]
    .iter()
    .map(|s| ModelSpec::parse(s).unwrap())
    .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- tensor

pub fn riemann_symmetries() -> Outcome {
    let mut worst = 0.0_f64;
    for spec in shipped_models() {
        let metric = chart(&spec);
        for p in metric.sample_points(20, SEED) {
            let rep = CurvatureReport::at(&metric, &p).map_err(|e| format!("{spec}: {e}"))?;
            let d = rep.riemann.symmetry_defect();
            worst = worst.max(d);
            ensure(d <= 1e-8, || format!("{spec} at {:?}: defect {d:e}", p.coords))?;
        }
    }
    Ok(format!("max relative defect {worst:.2e}"))
}

pub fn operator_trace() -> Outcome {
    // Unit round sphere first: trace = m(m-1)/2 with every eigenvalue 1.
    for m in 2..=6 {
        let spec = ModelSpec::parse(&format!("S{m}(r=1)")).unwrap();
        let metric = chart(&spec);
        for p in metric.sample_points(5, SEED) {
            let rep = CurvatureReport::at(&metric, &p).map_err(|e| e.to_string())?;
            let want = (m * (m - 1)) as f64 / 2.0;
            let tr = rep.operator.trace();
            ensure((tr - want).abs() <= 1e-8, || format!("S{m}: trace {tr} != {want}"))?;
            for ev in &rep.spectrum {
                ensure((ev - 1.0).abs() <= 1e-8, || format!("S{m}: eigenvalue {ev} != 1"))?;
            }
        }
    }
    let mut worst = 0.0_f64;
    for spec in shipped_models() {
        let metric = chart(&spec);
        for p in metric.sample_points(20, SEED) {
            let rep = CurvatureReport::at(&metric, &p).map_err(|e| e.to_string())?;
            let d = (rep.operator.trace() - rep.scalar / 2.0).abs();
            worst = worst.max(d);
            ensure(d <= 1e-8, || format!("{spec}: trace {} vs s/2 {}", rep.operator.trace(), rep.scalar / 2.0))?;
        }
    }
    Ok(format!("trace = s/2, max deviation {worst:.2e}"))
}

pub fn dual_vs_finite_differences() -> Outcome {
    let mut worst = 0.0_f64;
    for spec in shipped_models() {
        let metric = chart(&spec);
        for p in metric.sample_points(5, SEED) {
            let dual = metric.first_derivatives(&p).map_err(|e| e.to_string())?;
            let fd = fd_first_derivatives(&spec, &p.coords);
            for (k, dk) in dual.iter().enumerate() {
                for i in 0..spec.dim() {
                    for j in 0..spec.dim() {
                        let d = (dk[(i, j)] - fd[k][i][j]).abs();
                        worst = worst.max(d);
                        ensure(d <= 1e-6, || {
                            format!("{spec}: d_{k} g_{i}{j} dual {} vs fd {}", dk[(i, j)], fd[k][i][j])
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("max |dual - fd| {worst:.2e}"))
}

pub fn sectional_gl2_invariance() -> Outcome {
    let reports: Vec<(ModelSpec, CurvatureReport)> = shipped_models()
        .into_iter()
        .filter(|s| s.dim() >= 2)
        .map(|s| {
            let metric = chart(&s);
            let p = metric.sample_points(1, SEED).remove(0);
            let rep = CurvatureReport::at(&metric, &p).unwrap();
            (s, rep)
        })
        .collect();
    let n = reports.len();
    let strategy = (
        0..n,
        prop::collection::vec(-1.0f64..1.0, 14),
        prop::array::uniform4(-2.0f64..2.0),
    );
    run(64, strategy, |(idx, raw, [a, b, c, d])| {
        let (spec, rep) = &reports[idx];
        let m = spec.dim();
        let u = &raw[..m];
        let v = &raw[7..7 + m];
        prop_assume!((a * d - b * c).abs() > 0.1);
        let Ok(k0) = sectional(&rep.riemann, &rep.metric, u, v) else {
            return Err(TestCaseError::reject("degenerate plane"));
        };
        let u2: Vec<f64> = u.iter().zip(v).map(|(x, y)| a * x + b * y).collect();
        let v2: Vec<f64> = u.iter().zip(v).map(|(x, y)| c * x + d * y).collect();
        let k1 = sectional(&rep.riemann, &rep.metric, &u2, &v2)
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!((k0 - k1).abs() <= 1e-8 * k0.abs().max(1.0), "{spec}: {k0} vs {k1}");
        Ok(())
    })?;
    Ok("64 seeded (model, plane, GL(2)) cases".into())
}

// ----------------------------------------------------------------- model

pub fn model_spectra_match_closed_form() -> Outcome {
    let mut worst = 0.0_f64;
    let mut checked = 0;
    for spec in shipped_models() {
        let check = verify_model(&spec, 20, SEED).map_err(|e| format!("{spec}: {e}"))?;
        if let Some(d) = check.max_spectrum_deviation {
            worst = worst.max(d);
            checked += 1;
            ensure(d <= 1e-6, || format!("{spec}: spectrum deviation {d:e}"))?;
        }
        ensure(check.max_ricci_deviation <= 1e-6, || format!("{spec}: Ricci deviation {:e}", check.max_ricci_deviation))?;
        ensure(check.max_scalar_deviation <= 1e-6, || format!("{spec}: scalar deviation {:e}", check.max_scalar_deviation))?;
        if matches!(spec.factors()[0], ModelSpec::FubiniStudyCP { .. }) {
            ensure(check.min_numeric_eigenvalue >= -1e-8, || {
                format!("{spec}: eigenvalue {} < -1e-8", check.min_numeric_eigenvalue)
            })?;
        }
    }
    Ok(format!("{checked} exact spectra, max deviation {worst:.2e}; CP eigenvalues >= -1e-8"))
}

pub fn berger_multiplicity_identity() -> Outcome {
    for n in 2..=200usize {
        ensure(n * (n + 1) + (n * n - 1) + 1 == n * (2 * n + 1), || format!("n = {n}"))?;
        let spec = ModelSpec::BergerSphere { n, delta: rat(3, 2) };
        if n <= 12 {
            let s = closed_form_summary(&spec);
            let total: usize = s.curvature_operator_spectrum.exact().unwrap().iter().map(|e| e.multiplicity).sum();
            ensure(total == n * (2 * n + 1), || format!("n = {n}: multiplicities sum to {total}"))?;
        }
    }
    Ok("n(n+1) + (n^2-1) + 1 = n(2n+1) for n in 2..=200".into())
}

pub fn berger_scalar_consistency() -> Outcome {
    for n in 2..=20i64 {
        for (a, b) in [(1, 3), (1, 2), (1, 1), (6, 5), (4, 3), (7, 2), (9, 1)] {
            let d = rat(a, b);
            let lhs = int(2 * n) * &d + int(2 * n) * (int(2 * n + 2) - int(2) * &d);
            let rhs = int(2 * n) * (int(2 * n + 2) - &d);
            ensure(lhs == rhs, || format!("n = {n}, delta = {d}"))?;
            let s = closed_form_summary(&ModelSpec::BergerSphere { n: n as usize, delta: d.clone() });
            let trace: Rational = s
                .ricci_eigenvalues
                .iter()
                .map(|e| &e.value * int(e.multiplicity as i64))
                .sum();
            ensure(s.scalar == rhs && trace == rhs, || format!("n = {n}, delta = {d}: summary scalar {}", s.scalar))?;
        }
    }
    Ok("exact for n in 2..=20 over seven delta values".into())
}

pub fn berger_sign_thresholds() -> Outcome {
    let mut cases = 0;
    for n in 2..=10i64 {
        let op = rat(2 * n + 2, 2 * n + 1);
        let sec = rat(4, 3);
        let ric = int(n + 1);
        let scal = int(2 * n + 2);
        let tiny = rat(1, 1000);
        let mut deltas = vec![rat(1, 10), rat(1, 2), int(1), rat(5, 4), int(3), int(50)];
        for t in [&op, &sec, &ric, &scal] {
            deltas.extend([t - &tiny, t.clone(), t + &tiny]);
        }
        for d in deltas {
            let s = closed_form_summary(&ModelSpec::BergerSphere { n: n as usize, delta: d.clone() });
            let checks = [
                ("spectrum", s.curvature_operator_spectrum.min().unwrap().is_positive(), d < op),
                ("sectional", s.sec_min.as_ref().unwrap().is_positive(), d < sec),
                ("Ricci", s.ricci_min().unwrap().is_positive(), d < ric),
                ("scalar", s.scalar.is_positive(), d < scal),
            ];
            for (what, got, want) in checks {
                cases += 1;
                ensure(got == want, || format!("n = {n}, delta = {d}: {what} positivity {got}, expected {want}"))?;
            }
        }
    }
    Ok(format!("{cases} exact sign checks"))
}

// ------------------------------------------------------------ hypothesis

/// Fast extremes against enumeration; returns the number of (profile, p)
/// pairs compared.
pub fn oracle_equivalence(profiles: usize) -> Result<usize, String> {
    let mut g = rng(SEED);
    let mut pairs = 0;
    for i in 0..profiles {
        let m = 2 + i % 9;
        let minimal = i % 2 == 0;
        let k = random_profile(&mut g, m, minimal);
        let profile = profile_of(&k);
        let a2 = norm2(&k);
        for p in 1..m {
            let bf = brute_force(&k, p);
            let cmc = check_cmc_condition(&profile, p).map_err(|e| e.to_string())?;
            let want = &a2 + &bf.min_cmc;
            ensure(cmc.margin == Num::Exact(want.clone()), || {
                format!("{k:?} p={p}: cmc margin {} vs brute force {want}", cmc.margin)
            })?;
            ensure(cmc.holds == !want.is_negative(), || format!("{k:?} p={p}: cmc verdict"))?;
            let worst = profile.k_alpha(&cmc.worst_alpha).map_err(|e| e.to_string())?;
            let h = profile.mean_curvature();
            let q = &worst * &(&h - &worst);
            ensure(q == Num::Exact(bf.min_cmc.clone()), || format!("{k:?} p={p}: worst subset is not a minimizer"))?;
            if minimal {
                let min = check_minimal_condition(&profile, p).map_err(|e| e.to_string())?;
                let want = &a2 - &bf.max_k2;
                ensure(min.margin == Num::Exact(want.clone()), || {
                    format!("{k:?} p={p}: margin {} vs brute force {want}", min.margin)
                })?;
                let worst = profile.k_alpha(&min.worst_alpha).map_err(|e| e.to_string())?;
                ensure(worst.square() == Num::Exact(bf.max_k2.clone()), || {
                    format!("{k:?} p={p}: worst subset is not a maximizer")
                })?;
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

pub fn counterexample_margin() -> Outcome {
    let profile = PrincipalCurvatureProfile::parse("1,1,-2/3,-2/3,-2/3").unwrap();
    let c = check_minimal_condition(&profile, 2).map_err(|e| e.to_string())?;
    ensure(!c.holds && c.margin == Num::Exact(rat(-2, 3)), || format!("got holds={} margin={}", c.holds, c.margin))?;
    ensure(c.worst_alpha == vec![0, 1], || format!("worst subset {:?}", c.worst_alpha))?;
    Ok("(1,1,-2/3,-2/3,-2/3) at p=2 fails with margin -2/3".into())
}

fn structured_profile() -> impl Strategy<Value = Vec<Rational>> {
    let ratio = (-6i64..=6, 1i64..=3).prop_map(|(a, b)| rat(a, b));
    let four = (prop::collection::vec(ratio.clone(), 3), 0usize..=6).prop_map(|(abc, zeros)| {
        let mut v = abc.clone();
        v.push(-abc.iter().cloned().sum::<Rational>());
        v.extend(std::iter::repeat_n(Rational::zero(), zeros));
        v
    });
    let blocks = (1usize..=5, ratio.prop_filter("nonzero", |k| !k.is_zero()), 0usize..=3).prop_map(
        |(l, k, zeros)| {
            let mut v = vec![k.clone(); l];
            v.extend(std::iter::repeat_n(-k, l));
            v.extend(std::iter::repeat_n(Rational::zero(), zeros));
            v
        },
    );
    prop_oneof![four, blocks]
        .prop_filter("m >= 2", |v| v.len() >= 2)
        .prop_shuffle()
}

pub fn shortcut_soundness() -> Outcome {
    let covered = std::cell::Cell::new(0usize);
    run(300, structured_profile(), |k| {
        let profile = profile_of(&k);
        let m = k.len();
        for p in 1..m {
            let d = zeropp_sufficient(&profile, p).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(d.applies, d.shortcut.applies_to(p));
            if !d.applies {
                continue;
            }
            covered.set(covered.get() + 1);
            let c = check_minimal_condition(&profile, p).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(c.holds, "{:?} p={} shortcut {:?} but margin {}", k, p, d.shortcut, c.margin);
            if let Some(lb) = &d.margin_lower_bound {
                prop_assert!(c.margin.cmp_num(lb).is_ge(), "margin {} below bound {}", c.margin, lb);
            }
            if let ZeroppShortcut::TwoOppositeBlocks { l, k: kk } = &d.shortcut {
                let bf = brute_force(&k, p);
                let exact = &Num::int((2 * l) as i64 - (p * p) as i64) * &kk.square();
                let margin = Num::Exact(norm2(&k) - bf.max_k2);
                // (2l - p^2)k^2 is the margin when alpha lies in one block.
                prop_assert!(p > *l || margin == exact, "{:?} p={}: {} vs {}", k, p, margin, exact);
            }
        }
        Ok(())
    })?;
    Ok(format!("300 structured profiles, {} covered degrees", covered.get()))
}

/// Independent `ε` and `c` boundary identities; returns the number of
/// `(m, p)` pairs checked.
pub fn boundary_exactness(m_max: usize) -> Result<usize, String> {
    let mut count = 0;
    for m in 6..=m_max {
        let mi = m as i64;
        let mu = int(m.div_ceil(2) as i64);
        let ell = int((m / 2) as i64);
        let c = if m % 2 == 0 { rat(11 * mi - 16, 2 * (mi - 2)) } else { rat(11 * mi - 18, 2 * (mi - 3)) };
        ensure(curvgate::hypothesis::c_constant(m).ok() == Some(c.clone()), || format!("c_{m} mismatch"))?;
        let c_res = rat(3 * mi - 4, 2) - rat(2, 3) * (&ell - int(1)) * (&c - int(1));
        ensure(c_res.is_zero(), || format!("c_{m}: residual {c_res}"))?;
        ensure(c > Rational::one(), || format!("c_{m} <= 1"))?;
        for p in 2..=m / 2 {
            let pq = int((p * (m - p)) as i64);
            let eps = (&pq * (int(2) * &mu + int(1)) + int(3 * mi)) / (int(2) * &pq * (&mu - int(1)));
            ensure(curvgate::hypothesis::epsilon_constant(m, p).ok() == Some(eps.clone()), || {
                format!("epsilon_{{{m},{p}}} mismatch")
            })?;
            ensure(eps > Rational::one(), || format!("epsilon_{{{m},{p}}} <= 1"))?;
            // lb(1, ε) = (1+ε)/2 − (ε−1)(4μ−1)/6
            let lb = (int(1) + &eps) / int(2) - (&eps - int(1)) * (int(4) * &mu - int(1)) / int(6);
            let res = &pq * &lb + int(mi);
            ensure(res.is_zero(), || format!("epsilon_{{{m},{p}}}: residual {res}"))?;
            let engine = curvgate::hypothesis::pinched_operator_lb(&Num::int(1), &Num::Exact(eps.clone()), m)
                .map_err(|e| e.to_string())?;
            ensure(engine == Num::Exact(lb), || format!("pinched_operator_lb(1, eps, {m}) mismatch"))?;
            count += 1;
        }
    }
    Ok(count)
}

pub fn beta_monotonicity() -> Outcome {
    for m in 6..=40 {
        let mut prev: Option<Rational> = None;
        for p in 2..=m / 2 {
            let b = sphere_beta(p, m).map_err(|e| e.to_string())?;
            let (pi, mi) = (p as i64, m as i64);
            ensure(b == rat(pi * (mi - pi) + mi, pi - 1), || format!("beta({p},{m}) = {b}"))?;
            if let Some(prev) = &prev {
                ensure(b < *prev, || format!("beta({p},{m}) = {b} not below beta({},{m}) = {prev}", p - 1))?;
            }
            prev = Some(b);
        }
    }
    Ok("strictly decreasing in p for 6 <= m <= 40".into())
}

pub fn large_beta_dims_oracle() -> Outcome {
    let oracle: Vec<usize> = (4..=40usize)
        .filter(|&m| {
            let p = (m / 2) as i64;
            let mi = m as i64;
            rat(p * (mi - p) + mi, p - 1) > int(mi)
        })
        .collect();
    let engine = large_beta_dims(4..=40);
    ensure(oracle == vec![4, 5, 6, 7, 9], || format!("oracle gives {oracle:?}"))?;
    ensure(engine == oracle, || format!("engine gives {engine:?}"))?;
    Ok("{m in [4,40] : beta(m/2, m) > m} = {4,5,6,7,9}".into())
}

fn ambient_strategy(m: usize) -> impl Strategy<Value = AmbientSummary> {
    let r = (-4i64..=8, 1i64..=4).prop_map(|(a, b)| Num::Exact(rat(a, b)));
    (r.clone(), 1i64..=8, 0i64..=8, r.clone(), prop::option::of(r)).prop_map(
        move |(gamma, a, spread, ric_n, ric)| {
            let mut s = AmbientSummary::new(m + 1);
            s.gamma = Some(gamma);
            let a = rat(a, 4);
            let b = &a * (int(1) + rat(spread, 4));
            s.sec_bounds = Some((Num::Exact(a), Num::Exact(b)));
            s.ricci_normal_lb = Some(ric_n);
            s.ricci_lb = ric;
            s
        },
    )
}

pub fn duality_symmetry() -> Outcome {
    let strategy = (4usize..=9).prop_flat_map(|m| {
        let k = prop::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(a, b)| rat(a, b)), m);
        (ambient_strategy(m), k, any::<bool>())
    });
    run(120, strategy, |(ambient, mut k, minimal)| {
        if minimal {
            let last = k.len() - 1;
            k[last] = -k[..last].iter().cloned().sum::<Rational>();
        }
        let profile = profile_of(&k);
        let m = k.len();
        let flags = AssertedFlags::stable("test");
        for p in 0..=m {
            let a = hodge_verdicts(&ambient, &profile, p, &flags).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let b = hodge_verdicts(&ambient, &profile, m - p, &flags).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                prop_assert_eq!(&x.theorem_id, &y.theorem_id);
                prop_assert_eq!(&x.conclusion, &y.conclusion);
                prop_assert_eq!(&x.hypotheses, &y.hypotheses);
            }
        }
        Ok(())
    })?;
    Ok("120 seeded (ambient, profile) cases, every p".into())
}

pub fn cmc_reduction() -> Outcome {
    let strategy = prop::collection::vec((-9i64..=9, 1i64..=5).prop_map(|(a, b)| rat(a, b)), 2..=10);
    run(200, strategy, |mut k| {
        let last = k.len() - 1;
        k[last] = -k[..last].iter().cloned().sum::<Rational>();
        let profile = profile_of(&k);
        for p in 1..k.len() {
            let a = check_minimal_condition(&profile, p).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let b = check_cmc_condition(&profile, p).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(a.holds, b.holds);
            prop_assert_eq!(&a.margin, &b.margin);
        }
        Ok(())
    })?;
    Ok("200 seeded minimal profiles".into())
}

pub fn rank_parity() -> Outcome {
    for n in 1..=30usize {
        let want = if n % 2 == 0 { 1u64 << (n / 2) } else { 1u64 << ((n - 1) / 2) };
        ensure(spinor_rank_bound(n) == Some(want), || format!("n = {n}: {:?}", spinor_rank_bound(n)))?;
    }
    Ok("2^(n/2) even, 2^((n-1)/2) odd, n <= 30".into())
}

// ---------------------------------------------------------------- report

fn sample_requests() -> Vec<AnalysisRequest> {
    let mk = |ambient: AmbientSource, profile: ProfileSource, degrees: Vec<usize>, seed: u64| AnalysisRequest {
        ambient,
        profile,
        degrees,
        flags: AssertedFlags::stable("test"),
        format: OutputFormat::Json,
        samples: 4,
        seed,
    };
    let model = |s: &str| AmbientSource::Model(ModelSpec::parse(s).unwrap());
    let mut sphere = AmbientSummary::new(7);
    sphere.gamma = Some(Num::int(1));
    sphere.sec_bounds = Some((Num::int(1), Num::int(1)));
    sphere.ricci_lb = Some(Num::int(6));
    sphere.scalar_lb = Some(Num::int(42));
    vec![
        mk(model("E9"), ProfileSource::Preset("bdgg:n=4".into()), vec![2], 1),
        mk(model("S3xR2"), ProfileSource::Preset("opposite-pair:t=1,m=4".into()), vec![], 7),
        mk(model("CP2xR2"), ProfileSource::Preset("opposite-pair:t=1/2,m=5".into()), vec![2, 3], 11),
        mk(model("Berger(n=2,delta=6/5)"), ProfileSource::Preset("totally-geodesic:m=4".into()), vec![], 3),
        mk(
            AmbientSource::Manual(sphere),
            ProfileSource::Explicit(PrincipalCurvatureProfile::parse("2,-3/2,1/2,-1,0,0").unwrap()),
            vec![3],
            0,
        ),
    ]
}

pub fn report_determinism_and_round_trip() -> Outcome {
    for req in sample_requests() {
        let a = analyze(&req).map_err(|e| e.to_string())?;
        let b = analyze(&req).map_err(|e| e.to_string())?;
        let ja = a.to_json().map_err(|e| e.to_string())?;
        let jb = b.to_json().map_err(|e| e.to_string())?;
        ensure(ja == jb, || "two runs produced different JSON".into())?;
        let back = ReportDocument::from_json(&ja).map_err(|e| e.to_string())?;
        ensure(back == a, || "JSON did not round-trip".into())?;
        for fmt in [OutputFormat::Csv, OutputFormat::Md] {
            ensure(a.render(fmt).ok() == b.render(fmt).ok(), || format!("{fmt:?} differs"))?;
        }
    }
    Ok("5 requests byte-identical and round-tripped".into())
}

/// Every property, in a fixed order.
pub fn all() -> Vec<Property> {
    vec![
        ("tensor: Riemann symmetries and Bianchi", riemann_symmetries),
        ("tensor: operator trace = s/2", operator_trace),
        ("tensor: dual derivatives vs finite differences", dual_vs_finite_differences),
        ("tensor: sectional GL(2) invariance", sectional_gl2_invariance),
        ("model: spectra vs closed forms", model_spectra_match_closed_form),
        ("model: Berger multiplicity identity", berger_multiplicity_identity),
        ("model: Berger scalar consistency", berger_scalar_consistency),
        ("model: Berger sign thresholds", berger_sign_thresholds),
        ("hypothesis: oracle equivalence", || oracle_equivalence(200).map(|n| format!("{n} (profile, p) pairs"))),
        ("hypothesis: counterexample margin", counterexample_margin),
        ("hypothesis: shortcut soundness", shortcut_soundness),
        ("hypothesis: boundary exactness", || boundary_exactness(40).map(|n| format!("{n} (m, p) pairs"))),
        ("hypothesis: beta monotonicity", beta_monotonicity),
        ("hypothesis: large-beta dimensions", large_beta_dims_oracle),
        ("hypothesis: duality symmetry", duality_symmetry),
        ("hypothesis: CMC reduction", cmc_reduction),
        ("hypothesis: rank parity", rank_parity),
        ("report: determinism and round trip", report_determinism_and_round_trip),
    ]
}
