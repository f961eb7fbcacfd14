//! The `menger` command line.
//!
//! Settings resolve in the order defaults, `--config` TOML file, then
//! flags and their `MENGER_*` environment variables. Each run writes
//! `report.json` and `report.md` (with the resolved configuration) into
//! `--out`. Exit codes: 0 success or expected outcome, 1 property or solver
//! failure, 2 usage or configuration error.

mod config;
mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

pub use config::{FpConfig, GridConfig, NestedConfig, RngConfig, RunConfig, ToleranceConfig};
pub use report::Report;

use crate::convexsets::{Ball, MidConvention};
use crate::error::{Error, Result};
use crate::fixedpoint::{find_fixed_point, HybridParams, MappingSpec};
use crate::nested::{cantor_point, common_point, from_sets};
use crate::properties::{check, reproduce, Property, FIXTURES};
use crate::spaces::{Arithmetic, MetricSpace, Point};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "menger", version, about = "Midpoint sets, convexity verdicts and hybrid fixed points")]
pub struct Cli {
    /// TOML file with [grid], [rng], [tolerance], [fp], [nested] and [expect] tables.
    #[arg(long, global = true, env = "MENGER_CONFIG")]
    pub config: Option<PathBuf>,
    /// Seed for every sampled check; recorded in the report.
    #[arg(long, global = true, env = "MENGER_SEED")]
    pub seed: Option<u64>,
    /// Samples per property check.
    #[arg(long, global = true, env = "MENGER_SAMPLES")]
    pub samples: Option<usize>,
    /// Directory for report.json and report.md.
    #[arg(long, global = true, env = "MENGER_OUT", default_value = "menger-report")]
    pub out: PathBuf,
    /// Rational arithmetic (d_1, d_inf, lattices, function spaces).
    #[arg(long, global = true, conflicts_with = "float")]
    pub exact: bool,
    /// Floating-point arithmetic with tolerance tau.
    #[arg(long, global = true)]
    pub float: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Re-derive a named worked example with exact arithmetic.
    Reproduce { fixture: String },
    /// Run property engines on a space such as `l2:3` or `linf:2`.
    Check {
        /// l1:N, l2:N, linf:N, lp:P:N, z1:N, zinf:N, bounded:P:CAP:N, with an optional /exact or /float suffix.
        #[arg(long)]
        space: String,
        /// Comma-separated: MengerConvex, A, B, Bprime, Bdoubleprime, C, Homogeneity.
        #[arg(long, value_delimiter = ',', required = true)]
        props: Vec<String>,
        /// Expected outcome, e.g. `A=fails`; repeatable, overrides [expect].
        #[arg(long = "expect")]
        expect: Vec<String>,
        /// FromY (default) or FromX: which ball gets radius t·d(x, y).
        #[arg(long, value_parser = parse_convention)]
        convention: Option<MidConvention>,
    },
    /// Verify the hybrid inequality and locate a fixed point.
    Fixedpoint { mapping: PathBuf },
    /// Find a common point of a nested family of ball intersections.
    Nested {
        family: PathBuf,
        /// Defaults to l2 in the dimension of the first center.
        #[arg(long)]
        space: Option<String>,
    },
}

fn parse_convention(s: &str) -> std::result::Result<MidConvention, String> {
    match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
        "fromx" | "x" => Ok(MidConvention::FromX),
        "fromy" | "y" => Ok(MidConvention::FromY),
        _ => Err(format!("unknown convention {s:?}; use from-x or from-y")),
    }
}

/// Parses `args` (program name first), runs the command, writes the report
/// and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            print!("{}", report.to_markdown());
            if let Err(e) = report.write(&cli.out) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            report.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

/// Resolves the configuration: defaults, then the file, then flags.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.rng.seed = seed;
    }
    if let Some(n) = cli.samples {
        cfg.grid.samples = n;
    }
    if cli.exact {
        cfg.arithmetic = Some("exact".into());
    } else if cli.float {
        cfg.arithmetic = Some("float".into());
    }
    match cfg.arithmetic.as_deref() {
        None | Some("exact") | Some("float") => Ok(cfg),
        Some(other) => Err(Error::Config(format!("arithmetic must be exact or float, not {other:?}"))),
    }
}

fn space_for(cfg: &RunConfig, id: &str) -> Result<MetricSpace> {
    let mut space: MetricSpace = id.parse()?;
    match cfg.arithmetic.as_deref() {
        Some("exact") => space = space.with_arithmetic(Arithmetic::Exact)?,
        Some("float") => space = space.with_arithmetic(Arithmetic::Float)?,
        _ => {}
    }
    space.with_tau(cfg.tolerance.tau)
}

/// Errors that reflect bad input rather than a failed computation.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Config(_)
            | Error::Io(_)
            | Error::InvalidSpace(_)
            | Error::InvalidPoint(_)
            | Error::DimensionMismatch { .. }
            | Error::InexactInput
            | Error::ExactUnsupported(_)
    )
}

/// Runs the command without touching the filesystem beyond reading inputs.
pub fn execute(cli: &Cli) -> Result<Report> {
    let cfg = resolve_config(cli)?;
    match &cli.command {
        Command::Reproduce { fixture } => cmd_reproduce(&cfg, fixture),
        Command::Check { space, props, expect, convention } => {
            let mut cfg = cfg;
            if let Some(c) = convention {
                cfg.convention = *c;
            }
            for e in expect {
                let (k, v) = e
                    .split_once('=')
                    .ok_or_else(|| Error::Config(format!("--expect wants PROPERTY=STATUS, got {e:?}")))?;
                let which: Property = k.parse()?;
                cfg.expect.retain(|key, _| key.parse::<Property>().ok() != Some(which));
                cfg.expect.insert(which.name().to_string(), v.trim().to_ascii_lowercase());
            }
            cmd_check(&cfg, space, props)
        }
        Command::Fixedpoint { mapping } => cmd_fixedpoint(&cfg, mapping),
        Command::Nested { family, space } => cmd_nested(&cfg, family, space.as_deref()),
    }
}

pub fn cmd_reproduce(cfg: &RunConfig, fixture: &str) -> Result<Report> {
    if !FIXTURES.contains(&fixture) {
        return Err(Error::Parse(format!("unknown fixture {fixture:?}; available: {}", FIXTURES.join(", "))));
    }
    let f = reproduce(fixture)?;
    let mut r = Report::new(format!("reproduce {fixture}"), cfg);
    report::fixture_markdown(&mut r, &f);
    if !f.passed {
        r.fail(EXIT_FAILURE, "not reproduced");
    }
    r.result = serde_json::to_value(&f).expect("fixture serializes");
    Ok(r)
}

pub fn cmd_check(cfg: &RunConfig, space_id: &str, props: &[String]) -> Result<Report> {
    for status in cfg.expect.values() {
        if !["holds", "fails", "refused"].contains(&status.as_str()) {
            return Err(Error::Config(format!("expected status must be holds, fails or refused, not {status:?}")));
        }
    }
    let space = space_for(cfg, space_id)?;
    let plan = cfg.plan();
    let mut r = Report::new(format!("check {}", space.id()), cfg);
    let mut verdicts = Vec::new();
    let mut rows = Vec::new();
    for name in props {
        let which: Property = name.parse()?;
        let verdict = check(&space, which, cfg.convention, &plan)?;
        let expected = cfg.expected(which);
        let matched = verdict.status() == expected;
        if let Some(c) = verdict.certificate() {
            if !c.verify()? {
                r.fail(EXIT_FAILURE, "certificate did not re-verify");
            }
        }
        if !matched {
            r.fail(EXIT_FAILURE, "unexpected verdict");
        }
        rows.push(json!({ "property": which.name(), "expected": expected, "status": verdict.status(), "matched": matched }));
        verdicts.push(verdict);
    }
    r.line(format!("## Property checks on `{}`\n", space.id()));
    r.line(format!("convention {}, {} samples, seed {}\n", cfg.convention.name(), plan.samples, plan.seed));
    report::verdict_table(&mut r, &verdicts);
    r.line("");
    for row in &rows {
        r.line(format!("- {}: expected {}, got {}", row["property"].as_str().unwrap_or(""), row["expected"], row["status"]));
    }
    r.result = json!({ "space": space.id(), "expectations": rows, "verdicts": verdicts });
    Ok(r)
}

/// A mapping file: the mapping itself plus optional run inputs.
#[derive(Debug, Deserialize)]
struct FixedPointJob {
    #[serde(flatten)]
    mapping: MappingSpec,
    space: Option<String>,
    x0: Option<Point>,
    alpha: Option<f64>,
    beta: Option<f64>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn cmd_fixedpoint(cfg: &RunConfig, path: &Path) -> Result<Report> {
    let job: FixedPointJob = read_json(path)?;
    let dim = job
        .mapping
        .map
        .dim()
        .or_else(|| job.mapping.domain.bounds().map(|(lo, _)| lo.len()))
        .or_else(|| job.x0.as_ref().map(Point::dim))
        .ok_or_else(|| Error::Parse("cannot infer the dimension of the mapping".into()))?;
    let space = space_for(cfg, job.space.as_deref().unwrap_or(&format!("l2:{dim}")))?;
    let mut cfg = cfg.clone();
    cfg.fp.alpha = job.alpha.unwrap_or(cfg.fp.alpha);
    cfg.fp.beta = job.beta.unwrap_or(cfg.fp.beta);
    let params = HybridParams::new(cfg.fp.alpha, cfg.fp.beta).map_err(|e| Error::Config(e.to_string()))?;
    let x0 = job.x0.clone().unwrap_or_else(|| Point::zeros(dim, false));
    let mut r = Report::new(format!("fixedpoint {}", path.display()), &cfg);
    r.line(format!("## Fixed point on `{}`\n", space.id()));
    r.line(format!("(alpha, beta) = ({}, {}), x0 = {x0}\n", params.alpha, params.beta));
    match find_fixed_point(&space, &job.mapping, params, &x0, &cfg.solver()) {
        Ok(fp) => {
            r.line(format!("- u0 = {}", fp.u0));
            r.line(format!("- residual d(T u0, u0) = {:e}", fp.residual));
            r.line(format!("- f(u0) = {}, f(T u0) = {}", fp.f_value, fp.f_of_image));
            r.line(format!("- orbit: max excursion from x0 {}, radius about u0 {}", fp.orbit_excursion, fp.orbit_radius_about_u0));
            r.line(format!("- hybrid inequality: {} over {} samples", fp.hybrid.status(), fp.hybrid.samples()));
            r.result = serde_json::to_value(&fp).expect("result serializes");
        }
        Err(e) if is_usage(&e) => return Err(e),
        Err(e) => {
            r.line(format!("- failed: {e}"));
            r.result = json!({ "error": e.to_string(), "kind": error_kind(&e) });
            if let Error::NotHybrid { .. } = e {
                let witness = crate::fixedpoint::verify_hybrid(&space, &job.mapping, params, &cfg.plan())?;
                r.result["witness"] = serde_json::to_value(witness.certificate()).expect("certificate serializes");
            }
            r.fail(EXIT_FAILURE, "solver failure");
        }
    }
    Ok(r)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotHybrid { .. } => "not_hybrid",
        Error::Unbounded { .. } => "unbounded_orbit",
        Error::NonSelfMap { .. } => "non_self_map",
        Error::DomainEscape { .. } => "domain_escape",
        Error::BudgetExhausted { .. } => "budget_exhausted",
        Error::WindowTooLong { .. } => "window_too_long",
        Error::NoProgress { .. } => "no_progress",
        Error::NestingViolated { .. } => "nesting_violated",
        Error::DiametersNotVanishing { .. } => "diameters_not_vanishing",
        _ => "error",
    }
}

pub fn cmd_nested(cfg: &RunConfig, path: &Path, space_id: Option<&str>) -> Result<Report> {
    let sets: Vec<Vec<Ball>> = read_json(path)?;
    let dim = sets
        .iter()
        .flatten()
        .next()
        .map(|b| b.center.dim())
        .ok_or_else(|| Error::Parse("the family is empty".into()))?;
    let space = space_for(cfg, space_id.unwrap_or(&format!("l2:{dim}")))?;
    let tol = cfg.nested.tol;
    let mut r = Report::new(format!("nested {}", path.display()), cfg);
    r.line(format!("## Nested family on `{}`: {} sets\n", space.id(), sets.len()));
    let outcome = from_sets(&space, sets, &cfg.plan()).and_then(|family| {
        let point = common_point(&space, &family, tol)?;
        let violation = family.max_violation(&space, &point)?;
        let last = *family.diameters.last().expect("nonempty family");
        let cantor = if last < tol { Some(cantor_point(&space, &family, tol)?) } else { None };
        Ok((family, point, violation, cantor))
    });
    match outcome {
        Ok((family, point, violation, cantor)) => {
            r.line(format!("- common point {point}"));
            r.line(format!("- max constraint violation {violation}"));
            r.line(format!("- final diameter estimate {}", family.diameters.last().expect("nonempty")));
            if let Some(c) = &cantor {
                r.line(format!("- restart from the outer boundary reached {}, agreement {} (bound {})", c.restart, c.agreement, c.bound));
                if !c.unique {
                    r.fail(EXIT_FAILURE, "restarts disagree");
                }
            }
            r.result = json!({ "point": point, "max_violation": violation, "diameters": family.diameters, "cantor": cantor });
        }
        Err(e) if is_usage(&e) => return Err(e),
        Err(e) => {
            r.line(format!("- failed: {e}"));
            r.result = json!({ "error": e.to_string(), "kind": error_kind(&e) });
            r.fail(EXIT_FAILURE, "no common point");
        }
    }
    Ok(r)
}
