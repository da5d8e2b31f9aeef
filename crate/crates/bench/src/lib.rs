//! Fixtures shared by the criterion benchmarks.

use curvgate::ModelSpec;

/// Model spaces exercised by the curvature benchmarks, smallest first.
pub fn bench_models() -> Vec<ModelSpec> {
    ["S3", "Berger(n=2,delta=6/5)", "CP2", "S2xS3", "Berger(n=3,delta=3/2)"]
        .iter()
        .map(|s| ModelSpec::parse(s).expect("fixture specs parse"))
        .collect()
}

/// Profile strings for the condition-check benchmarks, one per dimension.
pub fn bench_profiles() -> Vec<(usize, String)> {
    (4..=12)
        .map(|m| {
            let k: Vec<String> = (0..m)
                .map(|i| {
                    let v = (i as i64 * 7 + 3) % 11 - 5;
                    format!("{v}/{}", 1 + i % 3)
                })
                .collect();
            (m, k.join(","))
        })
        .collect()
}
