//! Built-in consistency checks for `verify-all` and `figure1`.

use std::fmt::Write as _;

use anyhow::Result;
use curvgate::exact::{int, rat, render};
use curvgate::hypothesis::{
    check_cmc_condition, check_minimal_condition, constants_table, large_beta_dims, sphere_beta,
    BergerThresholds, Figure1Row, PinchingConstants,
};
use curvgate::model::verify_model;
use curvgate::report::OutputFormat;
use curvgate::{ModelSpec, Num, PrincipalCurvatureProfile, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check { name: name.into(), passed, detail }
    }
}

const MODELS: [&str; 12] = [
    "E4",
    "S3(r=1)",
    "S5(r=2)",
    "Berger(n=2,delta=1/2)",
    "Berger(n=2,delta=6/5)",
    "Berger(n=3,delta=3/2)",
    "CP2",
    "S2xR3",
    "S3xR2",
    "S2xS2",
    "S2xS3",
    "CP2xR2",
];

pub fn run_all(samples: usize, seed: u64) -> Vec<Check> {
    let mut out: Vec<Check> = MODELS
        .iter()
        .map(|text| Check::new(format!("model {text}"), model_check(text, samples, seed)))
        .collect();
    out.push(Check::new("Berger thresholds n in [2,32]", berger_thresholds()));
    out.push(Check::new("beta values and large-beta dimensions", beta_values()));
    out.push(Check::new("constant boundary identities", boundaries()));
    out.push(Check::new("subset extremes vs enumeration", subset_oracle(seed)));
    out
}

fn model_check(text: &str, samples: usize, seed: u64) -> Result<String, String> {
    let spec = ModelSpec::parse(text).map_err(|e| e.to_string())?;
    let c = verify_model(&spec, samples, seed).map_err(|e| e.to_string())?;
    let detail = match c.max_spectrum_deviation {
        Some(d) => format!("spectrum deviation {d:.1e}, Ricci {:.1e}", c.max_ricci_deviation),
        None => format!("numeric spectrum, min eigenvalue {:.3e}", c.min_numeric_eigenvalue),
    };
    if c.passed {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn berger_thresholds() -> Result<String, String> {
    for n in 2..=32usize {
        let t = BergerThresholds::derive(n).map_err(|e| e.to_string())?;
        let ni = n as i64;
        let expected = [
            (&t.spinor_upper, int(2 * ni + 2)),
            (&t.operator_nonneg_upper, rat(2 * ni + 2, 2 * ni + 1)),
            (&t.pinched_upper, rat(4 * (2 * ni * ni + ni + 6), 8 * ni * ni + ni + 18)),
            (&t.two_form_lower, rat(8 * (ni - 1), 17 * ni - 14)),
            (&t.two_form_upper, rat(4 * (11 * ni - 8), 35 * ni - 26)),
        ];
        for (got, want) in expected {
            if *got != want {
                return Err(format!("n = {n}: derived {} vs closed form {}", render(got), render(&want)));
            }
        }
    }
    Ok("all derived fractions equal the closed forms".into())
}

fn beta_values() -> Result<String, String> {
    for (p, m, want) in [(3, 6, rat(15, 2)), (3, 7, rat(19, 2)), (4, 9, rat(29, 3))] {
        let got = sphere_beta(p, m).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("beta({p},{m}) = {}", render(&got)));
        }
    }
    let dims = large_beta_dims(4..=40);
    if dims != [4, 5, 6, 7, 9] {
        return Err(format!("large-beta dimensions {dims:?}"));
    }
    Ok("beta(3,6)=15/2, beta(3,7)=19/2, beta(4,9)=29/3, large-beta {4,5,6,7,9}".into())
}

fn boundaries() -> Result<String, String> {
    let rows = constants_table(6, 40).map_err(|e| e.to_string())?;
    for r in &rows {
        let pc = PinchingConstants::new(r.m, r.p).map_err(|e| e.to_string())?;
        if !pc.epsilon_boundary_residual().is_zero() || !pc.c_boundary_residual().is_zero() {
            return Err(format!("nonzero residual at m = {}, p = {}", r.m, r.p));
        }
    }
    Ok(format!("{} (m, p) pairs exact", rows.len()))
}

/// Enumerates every `|α| = p` and compares with the sorted-extreme margins.
fn subset_oracle(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = 0;
    for i in 0..200 {
        let m = 2 + i % 9;
        let mut k: Vec<Rational> =
            (0..m).map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=4))).collect();
        let minimal = i % 2 == 0;
        if minimal {
            k[m - 1] = -k[..m - 1].iter().cloned().sum::<Rational>();
        }
        let profile = PrincipalCurvatureProfile::new(k.iter().cloned().map(Num::Exact).collect())
            .map_err(|e| e.to_string())?;
        let h: Rational = k.iter().cloned().sum();
        let a2: Rational = k.iter().map(|x| x * x).sum();
        for p in 1..m {
            let (mut max_k2, mut min_q) = (None::<Rational>, None::<Rational>);
            for mask in 0u32..(1 << m) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                let ka: Rational = (0..m).filter(|j| mask >> j & 1 == 1).map(|j| k[j].clone()).sum();
                let k2 = &ka * &ka;
                let q = &ka * (&h - &ka);
                if max_k2.as_ref().is_none_or(|b| k2 > *b) {
                    max_k2 = Some(k2);
                }
                if min_q.as_ref().is_none_or(|b| q < *b) {
                    min_q = Some(q);
                }
            }
            let cmc = check_cmc_condition(&profile, p).map_err(|e| e.to_string())?;
            if cmc.margin != Num::Exact(&a2 + min_q.unwrap()) {
                return Err(format!("profile {profile}, p = {p}: CMC margin {}", cmc.margin));
            }
            if minimal {
                let c = check_minimal_condition(&profile, p).map_err(|e| e.to_string())?;
                if c.margin != Num::Exact(&a2 - max_k2.unwrap()) {
                    return Err(format!("profile {profile}, p = {p}: margin {}", c.margin));
                }
            }
            pairs += 1;
        }
    }
    Ok(format!("200 profiles, {pairs} (profile, p) pairs"))
}

/// Ordering of the special δ values: the two `p`-form thresholds swap
/// across `n = 6` and coincide there.
pub fn figure1_ordering(rows: &[Figure1Row]) -> Vec<Check> {
    let value = |r: &Figure1Row, label: &str| -> Rational {
        r.values.iter().find(|v| v.label == label).map(|v| v.value.clone()).unwrap_or_default()
    };
    let mut out = Vec::new();
    for r in rows {
        let (op, pinched) = (value(r, "operator_nonneg"), value(r, "pinched_epsilon"));
        let expected = r.n.cmp(&6).reverse();
        // n < 6: op < pinched; n = 6: equal; n > 6: op > pinched.
        let got = pinched.cmp(&op);
        let outcome = if got == expected {
            Ok(format!("operator_nonneg {} vs pinched_epsilon {}", render(&op), render(&pinched)))
        } else {
            Err(format!("unexpected order: {} vs {}", render(&op), render(&pinched)))
        };
        out.push(Check::new(format!("n = {}", r.n), outcome));
    }
    let reference = rows.iter().find(|r| r.n > 6).map(Figure1Row::order);
    if let Some(reference) = reference {
        let differing: Vec<usize> = rows.iter().filter(|r| r.n > 6 && r.order() != reference).map(|r| r.n).collect();
        let outcome = if differing.is_empty() {
            Ok("identical for every n > 6".into())
        } else {
            Err(format!("differs at n = {differing:?}"))
        };
        out.push(Check::new("order above n = 6", outcome));
    }
    out
}

pub fn render_checks(checks: &[Check], format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => {
            let items: Vec<_> = checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            serde_json::to_string_pretty(&json!({
                "passed": checks.iter().all(|c| c.passed),
                "checks": items,
            }))?
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "passed", "detail"])?;
            for c in checks {
                w.write_record([c.name.as_str(), if c.passed { "true" } else { "false" }, c.detail.as_str()])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        OutputFormat::Md => {
            let mut s = String::from("| check | result | detail |\n|---|---|---|\n");
            for c in checks {
                let _ = writeln!(s, "| {} | {} | {} |", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail);
            }
            s
        }
    })
}
