//! `casimir-density`: profiles, midgap scans, the critical separation and the
//! limit-check battery, written as CSV (with `#` config header) or JSON.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or domain error.

mod limits;
mod output;

use std::f64::consts::PI;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use casimir_density::analysis::{self, critical_lambda, critical_separation_physical, midpoint_scan};
use casimir_density::{DielectricModel, Geometry, QuadratureConfig};

use output::{Document, Format};

/// Caps the rayon worker pool.
const THREADS_ENV: &str = "CASIMIR_DENSITY_THREADS";

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] casimir_density::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(name = "casimir-density", version, about = "Vacuum field fluctuations near dispersive half-spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// <E^2>, <B^2> and U along z
    Profile(ProfileArgs),
    /// Midgap energy density U(a/2)*a^4 against lambda = wp*a
    Scan(ScanArgs),
    /// Lambda at which the midgap energy density changes sign
    Critical(CriticalArgs),
    /// Asymptote and closed-form check battery
    Limits(LimitsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeometryArg {
    Single,
    Cavity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Drude,
    Eps,
    Pc,
    Vacuum,
}

#[derive(Debug, Clone, Args)]
struct ModelArgs {
    #[arg(long, value_enum, default_value = "drude")]
    model: ModelArg,
    /// Plasma frequency (Drude), in inverse length units
    #[arg(long, default_value_t = 1.0)]
    wp: f64,
    /// Permittivity (constant-epsilon model)
    #[arg(long, default_value_t = 4.0)]
    eps: f64,
}

impl ModelArgs {
    fn build(&self) -> Result<DielectricModel, CliError> {
        Ok(match self.model {
            ModelArg::Drude => DielectricModel::drude(self.wp)?,
            ModelArg::Eps => DielectricModel::constant_epsilon(self.eps)?,
            ModelArg::Pc => DielectricModel::PerfectConductor,
            ModelArg::Vacuum => DielectricModel::Vacuum,
        })
    }

    fn canonical(&self) -> String {
        match self.model {
            ModelArg::Drude => format!("--model drude --wp {}", self.wp),
            ModelArg::Eps => format!("--model eps --eps {}", self.eps),
            ModelArg::Pc => "--model pc".into(),
            ModelArg::Vacuum => "--model vacuum".into(),
        }
    }
}

#[derive(Debug, Clone, Args)]
struct QuadArgs {
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    #[arg(long)]
    tail_budget: Option<f64>,
    #[arg(long)]
    max_subdivisions: Option<usize>,
    #[arg(long)]
    inner_order: Option<usize>,
    #[arg(long)]
    min_decay_scale: Option<f64>,
}

impl QuadArgs {
    fn build(&self) -> Result<QuadratureConfig, CliError> {
        let d = QuadratureConfig::default();
        let cfg = QuadratureConfig {
            rel_tol: self.rel_tol.unwrap_or(d.rel_tol),
            abs_tol: self.abs_tol.unwrap_or(d.abs_tol),
            tail_exponent_budget: self.tail_budget.unwrap_or(d.tail_exponent_budget),
            max_subdivisions: self.max_subdivisions.unwrap_or(d.max_subdivisions),
            inner_rule_order: self.inner_order.unwrap_or(d.inner_rule_order),
            min_decay_scale: self.min_decay_scale.unwrap_or(d.min_decay_scale),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn canonical_quad(cfg: &QuadratureConfig) -> String {
    format!(
        "--rel-tol {:e} --abs-tol {:e} --tail-budget {} --max-subdivisions {} --inner-order {} --min-decay-scale {:e}",
        cfg.rel_tol, cfg.abs_tol, cfg.tail_exponent_budget, cfg.max_subdivisions, cfg.inner_rule_order, cfg.min_decay_scale
    )
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file; stdout when absent
    #[arg(long, short)]
    output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct ProfileArgs {
    #[arg(long, value_enum, default_value = "single")]
    geometry: GeometryArg,
    /// Cavity width
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Single-interface window start
    #[arg(long, default_value_t = 0.5)]
    zmin: f64,
    /// Single-interface window end
    #[arg(long, default_value_t = 5.0)]
    zmax: f64,
    #[arg(long, default_value_t = 64)]
    points: usize,
    /// Fraction of the gap excluded at each wall (cavity only)
    #[arg(long, default_value_t = 0.02)]
    margin: f64,
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 10.0)]
    lambda_min: f64,
    #[arg(long, default_value_t = 1000.0)]
    lambda_max: f64,
    /// Log-spaced points
    #[arg(long, default_value_t = 40)]
    points: usize,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
struct CriticalArgs {
    #[arg(long, default_value_t = 50.0)]
    lambda_lo: f64,
    #[arg(long, default_value_t = 200.0)]
    lambda_hi: f64,
    #[arg(long, default_value_t = 0.5)]
    tol: f64,
    /// Plasma frequency in eV; also report the separation in micrometers
    #[arg(long)]
    wp_ev: Option<f64>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Debug, Clone, Args)]
pub(crate) struct LimitsArgs {
    /// Overrides the acceptance band of the near-wall asymptote ratios
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    quad: QuadArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // ignore failure: a global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Profile(args) => cmd_profile(&args),
        Command::Scan(args) => cmd_scan(&args),
        Command::Critical(args) => cmd_critical(&args),
        Command::Limits(args) => limits::cmd_limits(&args),
    }
}

fn cmd_profile(args: &ProfileArgs) -> Result<ExitCode, CliError> {
    let model = args.model.build()?;
    let cfg = args.quad.build()?;
    let (geometry, window, geo_flags) = match args.geometry {
        GeometryArg::Single => (
            Geometry::SingleInterface,
            Some((args.zmin, args.zmax)),
            format!("--geometry single --zmin {} --zmax {}", args.zmin, args.zmax),
        ),
        GeometryArg::Cavity => (
            Geometry::cavity(args.a)?,
            None,
            format!("--geometry cavity --a {} --margin {}", args.a, args.margin),
        ),
    };
    let prof = analysis::profile(geometry, model, args.points, args.margin, window, &cfg)?;

    let argv = format!(
        "profile {geo_flags} {} --points {} {} --format {}",
        args.model.canonical(),
        args.points,
        canonical_quad(&cfg),
        args.out.format.name()
    );
    let mut doc = Document::new("profile", argv, &["z", "e2", "b2", "u", "err"]);
    doc.config("geometry", format!("{geometry:?}"));
    doc.config("model", format!("{model:?}"));
    doc.config("points", args.points.to_string());
    doc.quad_config(&cfg);
    for p in &prof.points {
        doc.row(&[p.z, p.e2, p.b2, p.u, p.err]);
    }
    doc.write(args.out.format, args.out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(args: &ScanArgs) -> Result<ExitCode, CliError> {
    if !(args.lambda_max > args.lambda_min) || args.points < 2 {
        return Err(CliError::Usage(format!(
            "empty scan range: need lambda_min < lambda_max and at least 2 points (got [{}, {}], {} points)",
            args.lambda_min, args.lambda_max, args.points
        )));
    }
    let cfg = args.quad.build()?;
    let scan = midpoint_scan(args.lambda_min, args.lambda_max, args.points, &cfg)?;
    let argv = format!(
        "scan --lambda-min {} --lambda-max {} --points {} {} --format {}",
        args.lambda_min,
        args.lambda_max,
        args.points,
        canonical_quad(&cfg),
        args.out.format.name()
    );
    let mut doc = Document::new("scan", argv, &["lambda", "u_mid_scaled"]);
    doc.config("spacing", "log".into());
    let reference = -PI * PI / 720.0;
    doc.config("perfect_conductor_limit", format!("{reference:e}"));
    doc.quad_config(&cfg);
    for p in &scan {
        doc.row(&[p.lambda, p.u_mid_scaled]);
    }
    // the perfectly conducting limit, reached as lambda -> infinity
    doc.row(&[f64::INFINITY, reference]);
    doc.write(args.out.format, args.out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_critical(args: &CriticalArgs) -> Result<ExitCode, CliError> {
    let cfg = args.quad.build()?;
    let lambda_c = critical_lambda(&cfg, (args.lambda_lo, args.lambda_hi), args.tol)?;
    let a_c = args.wp_ev.map(|ev| critical_separation_physical(lambda_c, ev)).transpose()?;
    if args.json {
        let report = serde_json::json!({
            "config": {
                "bracket": [args.lambda_lo, args.lambda_hi],
                "tol": args.tol,
                "wp_ev": args.wp_ev,
                "quadrature": output::quad_json(&cfg),
            },
            "lambda_c": lambda_c,
            "a_c_um": a_c,
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("lambda_c = {lambda_c:.4}  (bracket [{}, {}], tol {})", args.lambda_lo, args.lambda_hi, args.tol);
        if let (Some(a), Some(ev)) = (a_c, args.wp_ev) {
            println!("a_c = {a:.4} um  (wp = {ev} eV)");
        }
    }
    Ok(ExitCode::SUCCESS)
}
