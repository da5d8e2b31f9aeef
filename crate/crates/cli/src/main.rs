use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use curvgate::exact::render;
use curvgate::hypothesis::{constants_table, figure1_data, parse_profile_or_preset, AssertedFlags};
use curvgate::model::{closed_form_summary, verify_model, CurvatureSummary, Eigen, NumericCheck, Spectrum};
use curvgate::report::{analyze, render_constants, render_figure1, AmbientSource, OutputFormat, ProfileSource};
use curvgate::{AmbientSummary, AnalysisRequest, ModelSpec};
use serde_json::json;

mod verify;

#[derive(Parser)]
#[command(name = "curvgate", version, about = "Curvature of model spaces and exact checks of vanishing criteria")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for chart sampling.
    #[arg(long, env = "CURVGATE_SEED", default_value_t = 0, global = true)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Md => OutputFormat::Md,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form curvature summary of a model space, e.g. `Berger(n=2,delta=1/2)`.
    Model {
        spec: String,
        /// Compare against the coordinate chart; exits nonzero on deviation > 1e-6.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Evaluate every applicable criterion for an ambient and a profile.
    Analyze(AnalyzeArgs),
    /// Table of epsilon_{m,p}, c_m and beta(p,m).
    Constants {
        #[arg(long, default_value_t = 6)]
        m_min: usize,
        #[arg(long, default_value_t = 12)]
        m_max: usize,
    },
    /// Special values of delta for Berger spheres, sorted per n.
    Figure1 {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Run the built-in consistency checks.
    VerifyAll {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Ambient model spec.
    #[arg(long, conflicts_with = "ambient_json", required_unless_present = "ambient_json")]
    ambient: Option<String>,
    /// JSON file with a manual ambient summary.
    #[arg(long)]
    ambient_json: Option<PathBuf>,
    /// Comma-separated principal curvatures or a preset such as `bdgg:n=4`.
    #[arg(long, allow_hyphen_values = true)]
    profile: String,
    /// Degrees to check; all of 0..=m when omitted.
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Provenance of the stability assumption.
    #[arg(long, default_value = "assumed by the caller")]
    stable: String,
    /// Drop the stability assumption.
    #[arg(long, conflicts_with = "stable")]
    unstable: bool,
    #[arg(long, value_name = "PROVENANCE")]
    not_totally_geodesic: Option<String>,
    #[arg(long, value_name = "PROVENANCE")]
    ric_normal_positive: Option<String>,
    #[arg(long, value_name = "PROVENANCE")]
    infinite_volume: Option<String>,
    /// Chart samples used when the ambient spectrum is numeric only.
    #[arg(long, default_value_t = 20)]
    samples: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Returns whether every requested check passed.
fn run(cli: &Cli) -> Result<bool> {
    let format = OutputFormat::from(cli.format);
    let (text, ok) = match &cli.command {
        Command::Model { spec, verify, samples } => {
            let spec = ModelSpec::parse(spec)?;
            let summary = closed_form_summary(&spec);
            let check = if *verify { Some(verify_model(&spec, *samples, cli.seed)?) } else { None };
            let ok = check.as_ref().is_none_or(|c| c.passed);
            (render_model(&summary, check.as_ref(), format)?, ok)
        }
        Command::Analyze(args) => {
            let req = request(args, cli.seed, format)?;
            (analyze(&req)?.render(format)?, true)
        }
        Command::Constants { m_min, m_max } => {
            if m_min > m_max {
                bail!("empty range: m_min {m_min} > m_max {m_max}");
            }
            let rows = constants_table(*m_min, *m_max)?;
            if rows.is_empty() {
                bail!("empty range: the table starts at m = 6");
            }
            (render_constants(&rows, format)?, true)
        }
        Command::Figure1 { n_min, n_max } => {
            let rows = figure1_data(*n_min, *n_max)?;
            let mut text = render_figure1(&rows, format)?;
            let checks = verify::figure1_ordering(&rows);
            for c in &checks {
                eprintln!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            if matches!(format, OutputFormat::Md) {
                text.push('\n');
                for c in &checks {
                    let _ = writeln!(text, "- {} {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
                }
            }
            (text, checks.iter().all(|c| c.passed))
        }
        Command::VerifyAll { samples } => {
            let checks = verify::run_all(*samples, cli.seed);
            let ok = checks.iter().all(|c| c.passed);
            (verify::render_checks(&checks, format)?, ok)
        }
    };
    emit(cli, &text)?;
    Ok(ok)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn request(args: &AnalyzeArgs, seed: u64, format: OutputFormat) -> Result<AnalysisRequest> {
    let ambient = match (&args.ambient, &args.ambient_json) {
        (Some(spec), None) => AmbientSource::Model(ModelSpec::parse(spec)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let summary: AmbientSummary =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            AmbientSource::Manual(summary)
        }
        _ => bail!("give exactly one of --ambient and --ambient-json"),
    };
    let profile = if args.profile.contains(':') {
        // Validate now so a bad preset fails before any curvature work.
        parse_profile_or_preset(&args.profile)?;
        ProfileSource::Preset(args.profile.clone())
    } else {
        ProfileSource::Explicit(parse_profile_or_preset(&args.profile)?)
    };
    let flags = AssertedFlags {
        stable: (!args.unstable).then(|| args.stable.clone()),
        not_totally_geodesic: args.not_totally_geodesic.clone(),
        ric_normal_somewhere_positive: args.ric_normal_positive.clone(),
        infinite_volume: args.infinite_volume.clone(),
    };
    Ok(AnalysisRequest {
        ambient,
        profile,
        degrees: args.degrees.clone(),
        flags,
        format,
        samples: args.samples,
        seed,
    })
}

fn eigen_list(e: &[Eigen]) -> String {
    let parts: Vec<String> = e.iter().map(|e| format!("{}:{}", render(&e.value), e.multiplicity)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn opt(r: &Option<curvgate::Rational>) -> String {
    r.as_ref().map(render).unwrap_or_else(|| "-".into())
}

fn render_model(s: &CurvatureSummary, check: Option<&NumericCheck>, format: OutputFormat) -> Result<String> {
    let spectrum = match &s.curvature_operator_spectrum {
        Spectrum::Exact(e) => eigen_list(e),
        Spectrum::NumericOnly => "numeric only".into(),
    };
    let mut rows = vec![
        ("spec", s.spec.to_string()),
        ("dim", s.dim.to_string()),
        ("sec_min", opt(&s.sec_min)),
        ("sec_max", opt(&s.sec_max)),
        ("curvature_operator_spectrum", spectrum),
        ("ricci_eigenvalues", eigen_list(&s.ricci_eigenvalues)),
        ("scalar", render(&s.scalar)),
        ("gamma", opt(&s.gamma)),
        ("flags", s.flags.join("; ")),
    ];
    if let Some(c) = check {
        let dev = c.max_spectrum_deviation.map(|d| format!("{d:.3e}")).unwrap_or_else(|| "-".into());
        rows.extend([
            ("verify_samples", c.samples.to_string()),
            ("verify_seed", c.seed.to_string()),
            ("max_spectrum_deviation", dev),
            ("max_ricci_deviation", format!("{:.3e}", c.max_ricci_deviation)),
            ("max_scalar_deviation", format!("{:.3e}", c.max_scalar_deviation)),
            ("min_numeric_eigenvalue", format!("{:.3e}", c.min_numeric_eigenvalue)),
            ("verify_passed", c.passed.to_string()),
        ]);
    }
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&json!({ "summary": s, "verification": check }))?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["field", "value"])?;
            for (k, v) in rows {
                w.write_record([k, v.as_str()])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        OutputFormat::Md => {
            let mut out = String::from("| field | value |\n|---|---|\n");
            for (k, v) in rows {
                let _ = writeln!(out, "| {k} | {v} |");
            }
            out
        }
    })
}
