//! `hup check-cone | transform | verify`.
//!
//! Exit codes: 0 success (non-harmonic cone, suite passed), 2 for a
//! harmonic cone or a failed suite, 64 for usage errors, 1 for runtime errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hup_core::hup::{
    armitage_test, harmonic_cone_witnesses_with, mu_hat, plane_wave_order, ConeSpec, ConeVerdict, LambdaSet,
    RANK_THRESHOLD,
};
use hup_core::poly::HomogeneousPoly;
use hup_core::quad::sphere_rule;
use hup_core::sphharm::{dim_harmonic, SphericalDensity};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::formats::{read_points_csv, write_scan_csv, CoefficientFile};
use crate::report::Report;
use crate::verify::{self, Suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_VERDICT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Relative tolerance of `check-cone` when `--tol` is absent.
pub const CHECK_CONE_TOL: f64 = 1e-6;
const DEFAULT_LMAX: usize = 8;
const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "hup", version, about = "Heisenberg uniqueness pairs for measures on spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a cone lies in the zero set of a harmonic polynomial.
    CheckCone(CheckConeArgs),
    /// Sample the Fourier transform of a density over a set Λ.
    Transform(TransformArgs),
    /// Run a randomised invariant suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Ambient dimension, 2..=6.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Largest harmonic degree.
    #[arg(long)]
    pub lmax: Option<usize>,
    /// Quadrature order, at least 2·lmax.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    KAlpha,
    Hyperplane,
}

#[derive(Debug, Args)]
pub struct CheckConeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "k-alpha")]
    pub family: Family,
    /// Opening `α ∈ (0,1)` of `|x_1| = α|x|`.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// CSV of cone directions replacing the sampled ones.
    #[arg(long)]
    pub directions: Option<PathBuf>,
    /// Number of sampled directions (default 4·dim H_lmax).
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DensityKind {
    /// `f = 1`.
    Constant,
    /// `f = η_index`.
    Coordinate,
    /// `f = Y_k^l` on `S²`.
    Ylm,
    /// A coefficient table read from `--coeffs`.
    Coeffs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaKind {
    Sphere,
    Hyperplane,
    KAlpha,
    Paraboloid,
    GeodesicCircle,
    PlanarParabola,
    Points,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "constant")]
    pub density: DensityKind,
    /// 1-based coordinate for `--density coordinate`.
    #[arg(long, default_value_t = 1)]
    pub index: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "sphere")]
    pub lambda: LambdaKind,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 64)]
    pub count: usize,
    /// Largest distance, `r` or `|t|` sampled on unbounded sets.
    #[arg(long, default_value_t = 10.0)]
    pub extent: f64,
    /// CSV of evaluation points for `--lambda points`.
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub suite: Suite,
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Self::Runtime(e)
    }
}

impl From<hup_core::error::HupError> for Failure {
    fn from(e: hup_core::error::HupError) -> Self {
        Self::Runtime(e.into())
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parses `args` (program name first), runs the subcommand and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::CheckCone(a) => check_cone(a),
        Command::Transform(a) => transform(a),
        Command::Verify(a) => verify_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            EXIT_RUNTIME
        }
    }
}

struct Resolved {
    n: usize,
    lmax: usize,
    order: usize,
    tol: Option<f64>,
}

fn resolve(c: &Common, default_lmax: usize, default_order: usize) -> Result<Resolved, Failure> {
    if !(2..=6).contains(&c.n) {
        return usage(format!("--n must lie in [2, 6], got {}", c.n));
    }
    if let Some(t) = c.tol {
        if !(t > 0.0 && t.is_finite()) {
            return usage(format!("--tol must be positive, got {t}"));
        }
    }
    let lmax = c.lmax.unwrap_or(default_lmax);
    let order = c.order.unwrap_or(default_order.max(2 * lmax));
    if order < 2 * lmax {
        return usage(format!("--order {order} is below 2·lmax = {}", 2 * lmax));
    }
    Ok(Resolved { n: c.n, lmax, order, tol: c.tol })
}

fn check_alpha(alpha: Option<f64>) -> Result<Option<f64>, Failure> {
    match alpha {
        Some(a) if !(a > 0.0 && a < 1.0) => usage(format!("--alpha must lie in (0, 1), got {a}")),
        a => Ok(a),
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path).map(BufReader::new).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write(&mut file)?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
            lock.flush().context("flushing stdout")?;
        }
    }
    Ok(())
}

fn polynomial_json(p: &HomogeneousPoly) -> Value {
    let terms: Vec<Value> = p
        .monomials()
        .iter()
        .zip(p.coeffs())
        .filter(|(_, c)| **c != 0.0)
        .map(|(m, c)| json!({ "exponents": m, "coeff": c }))
        .collect();
    Value::Array(terms)
}

fn check_cone(a: CheckConeArgs) -> Result<i32, Failure> {
    let cfg = resolve(&a.common, DEFAULT_LMAX, DEFAULT_ORDER)?;
    if a.common.format == Some(Format::Csv) {
        return usage("check-cone writes JSON only");
    }
    let alpha = check_alpha(a.alpha)?;
    let tol = cfg.tol.unwrap_or(CHECK_CONE_TOL);
    if tol >= 1.0 {
        return usage(format!("--tol must be below 1 for check-cone, got {tol}"));
    }
    let n = cfg.n;
    let count = a.count.unwrap_or(4 * dim_harmonic(n, cfg.lmax));
    let mut rng = ChaCha8Rng::seed_from_u64(a.common.seed);
    let cone = match (&a.directions, a.family) {
        (Some(path), _) => {
            let dirs = read_points_csv(open(path)?).map_err(|e| Failure::Usage(format!("{e:#}")))?;
            if dirs.is_empty() {
                return usage("direction list is empty");
            }
            ConeSpec::custom(n, &dirs).map_err(|e| Failure::Usage(e.to_string()))?
        }
        (None, Family::KAlpha) => {
            let Some(alpha) = alpha else { return usage("--family k-alpha needs --alpha") };
            ConeSpec::k_alpha(n, alpha, count, &mut rng)?
        }
        (None, Family::Hyperplane) => ConeSpec::hyperplane(n, count, &mut rng)?,
    };
    let mut report = Report::new("check-cone");
    report
        .input("n", n)
        .input("lmax", cfg.lmax)
        .input("family", if a.directions.is_some() { "custom" } else { family_name(a.family) })
        .input("alpha", alpha)
        .input("directions", cone.directions().len())
        .input("seed", a.common.seed)
        .tolerance("rank", tol)
        .tolerance("armitage", tol);

    let witnesses = match harmonic_cone_witnesses_with(&cone, cfg.lmax, tol) {
        Err(hup_core::error::HupError::UnderSampled { rows, cols }) => {
            return usage(format!("{rows} directions cannot resolve {cols} harmonic coefficients"))
        }
        w => w?,
    };
    let listed: Vec<Value> = witnesses
        .iter()
        .map(|w| json!({ "degree": w.degree(), "residual": w.residual(), "polynomial": polynomial_json(w.polynomial()) }))
        .collect();
    for (i, w) in witnesses.iter().enumerate() {
        report.residual(format!("witness {i} (degree {})", w.degree()), w.residual());
    }
    report.diagnostic("witnesses", listed);
    report.diagnostic("default_rank_threshold", RANK_THRESHOLD);
    if let (Some(alpha), None, Family::KAlpha, true) = (alpha, &a.directions, a.family, n >= 3) {
        let arm = armitage_test(alpha, n, cfg.lmax, tol)?;
        let verdict = match arm.verdict {
            ConeVerdict::NonHarmonic { up_to } => json!({ "harmonic": false, "up_to": up_to }),
            ConeVerdict::Harmonic { l, m } => json!({ "harmonic": true, "l": l, "m": m }),
        };
        let agrees = matches!(arm.verdict, ConeVerdict::Harmonic { .. }) == !witnesses.is_empty();
        report.diagnostic("armitage", json!({ "verdict": verdict, "min_ratio": arm.min_ratio, "agrees": agrees }));
    }
    let harmonic = !witnesses.is_empty();
    report.verdict = if harmonic {
        format!("harmonic (witness of degree {})", witnesses[0].degree())
    } else {
        format!("non-harmonic up to degree {}", cfg.lmax)
    };
    emit(&a.common.out, |w| report.write(w))?;
    Ok(if harmonic { EXIT_VERDICT } else { EXIT_OK })
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::KAlpha => "k-alpha",
        Family::Hyperplane => "hyperplane",
    }
}

fn build_density(a: &TransformArgs, n: usize) -> Result<SphericalDensity, Failure> {
    Ok(match a.density {
        DensityKind::Constant => SphericalDensity::constant(n, Complex64::new(1.0, 0.0)),
        DensityKind::Coordinate => {
            if !(1..=n).contains(&a.index) {
                return usage(format!("--index must lie in [1, {n}], got {}", a.index));
            }
            let mut exps = vec![0u32; n];
            exps[a.index - 1] = 1;
            SphericalDensity::Polynomial(HomogeneousPoly::from_terms(n, 1, &[(&exps, 1.0)])?)
        }
        DensityKind::Ylm => {
            if n != 3 {
                return usage("--density ylm needs --n 3");
            }
            SphericalDensity::ylm(a.k, a.l).map_err(|e| Failure::Usage(e.to_string()))?
        }
        DensityKind::Coeffs => {
            let Some(path) = &a.coeffs else { return usage("--density coeffs needs --coeffs FILE") };
            let file = CoefficientFile::read(open(path)?).map_err(|e| Failure::Usage(format!("{e:#}")))?;
            if file.n != n {
                return usage(format!("coefficient file has n = {}, but --n is {n}", file.n));
            }
            SphericalDensity::coefficients(file.to_table().map_err(|e| Failure::Usage(format!("{e:#}")))?)
        }
    })
}

fn build_lambda(a: &TransformArgs, n: usize, rng: &mut ChaCha8Rng) -> Result<LambdaSet, Failure> {
    let need = |dim: usize, name: &str| -> Result<(), Failure> {
        if n == dim {
            Ok(())
        } else {
            usage(format!("--lambda {name} needs --n {dim}"))
        }
    };
    Ok(match a.lambda {
        LambdaKind::Sphere => LambdaSet::sphere(n, a.radius).map_err(|e| Failure::Usage(e.to_string()))?,
        LambdaKind::Hyperplane => LambdaSet::Cone(ConeSpec::hyperplane(n, a.count.max(1), rng)?),
        LambdaKind::KAlpha => {
            let Some(alpha) = check_alpha(a.alpha)? else { return usage("--lambda k-alpha needs --alpha") };
            LambdaSet::Cone(ConeSpec::k_alpha(n, alpha, a.count.max(1), rng)?)
        }
        LambdaKind::Paraboloid => {
            need(3, "paraboloid")?;
            LambdaSet::Paraboloid
        }
        LambdaKind::GeodesicCircle => {
            need(3, "geodesic-circle")?;
            let Some(alpha) = a.alpha else { return usage("--lambda geodesic-circle needs --alpha (polar angle)") };
            LambdaSet::geodesic_circle(alpha, a.radius).map_err(|e| Failure::Usage(e.to_string()))?
        }
        LambdaKind::PlanarParabola => {
            need(2, "planar-parabola")?;
            LambdaSet::PlanarParabola
        }
        LambdaKind::Points => {
            let Some(path) = &a.points else { return usage("--lambda points needs --points FILE") };
            let pts = read_points_csv(open(path)?).map_err(|e| Failure::Usage(format!("{e:#}")))?;
            LambdaSet::points(n, pts).map_err(|e| Failure::Usage(e.to_string()))?
        }
    })
}

fn transform(a: TransformArgs) -> Result<i32, Failure> {
    let cfg = resolve(&a.common, 0, 0)?;
    if !(a.extent > 0.0 && a.extent.is_finite()) {
        return usage(format!("--extent must be positive, got {}", a.extent));
    }
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(a.common.seed);
    let density = build_density(&a, n)?;
    let lambda = build_lambda(&a, n, &mut rng)?;
    let points = lambda.sample(a.count, a.extent, &mut rng);
    if points.is_empty() {
        return usage("the evaluation point list is empty");
    }
    let reach = points.iter().map(|p| hup_core::norm(p)).fold(0.0, f64::max);
    let band = density.band_limit().unwrap_or(cfg.lmax.max(16));
    let order = a.common.order.unwrap_or_else(|| plane_wave_order(band, reach)).max(cfg.order);
    let rule = sphere_rule(n, order)?;
    let values = points.iter().map(|p| mu_hat(&density, p, &rule)).collect::<Result<Vec<_>, _>>()?;

    match a.common.format.unwrap_or(Format::Csv) {
        Format::Csv => emit(&a.common.out, |w| write_scan_csv(w, &points, &values))?,
        Format::Json => {
            let max_abs = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
            let mut report = Report::new("transform");
            report
                .input("n", n)
                .input("density", format!("{:?}", a.density).to_lowercase())
                .input("lambda", format!("{:?}", a.lambda).to_lowercase())
                .input("points", points.len())
                .input("order", order)
                .input("seed", a.common.seed)
                .diagnostic("max_abs", max_abs)
                .diagnostic(
                    "samples",
                    points
                        .iter()
                        .zip(&values)
                        .map(|(p, v)| json!({ "x": p, "re": v.re, "im": v.im, "abs": v.norm() }))
                        .collect::<Vec<_>>(),
                );
            if let Some(t) = cfg.tol {
                report.tolerance("vanishing", t);
                report.verdict = if max_abs < t { "vanishes".into() } else { "does not vanish".into() };
            } else {
                report.verdict = "sampled".into();
            }
            emit(&a.common.out, |w| report.write(w))?;
        }
    }
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs) -> Result<i32, Failure> {
    let cfg = resolve(&a.common, DEFAULT_LMAX, DEFAULT_ORDER)?;
    if a.common.format == Some(Format::Csv) {
        return usage("verify writes JSON only");
    }
    if !a.suite.supports(cfg.n) {
        return usage(format!("suite {} does not run for n = {}", a.suite.name(), cfg.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.common.seed);
    let mut report = Report::new("verify");
    report
        .input("suite", a.suite.name())
        .input("n", cfg.n)
        .input("lmax", cfg.lmax)
        .input("order", cfg.order)
        .input("seed", a.common.seed);
    let suite_cfg = SuiteConfig { n: cfg.n, max_degree: cfg.lmax, order: cfg.order, tol: cfg.tol };
    let passed = verify::run(a.suite, suite_cfg, &mut rng, &mut report)?;
    report.diagnostic("max_residual", report.max_residual());
    report.verdict = if passed { "pass".into() } else { "fail".into() };
    emit(&a.common.out, |w| report.write(w))?;
    Ok(if passed { EXIT_OK } else { EXIT_VERDICT })
}
