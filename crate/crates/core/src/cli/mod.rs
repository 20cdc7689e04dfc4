//! Command-line front end: `compute`, `sweep`, `limits` and `validate`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 quadrature failure, 3 validation
//! failure. Data goes to the output stream, diagnostics to the error stream.

pub mod output;
pub mod validate;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::complexity::asymptotic::{self, AsymptoticRequest, Limit, Quantity};
use crate::complexity::{measure, Method, Space};
use crate::error::Error;
use crate::functionals::QuarticPower;
use crate::specfun::QuadratureConfig;
use crate::states::StateSpec;
use output::{fmt_num, StateRecord, DENSITY_COLUMNS, STATE_COLUMNS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_QUADRATURE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hydrocomplex",
    version,
    about = "Entropy, disequilibrium and shape complexity of D-dimensional hydrogenic states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measures of a single state.
    Compute(ComputeArgs),
    /// Measures over a grid of ground or circular states, as CSV.
    Sweep(SweepArgs),
    /// Exact versus asymptotic complexities in the D or n limit.
    Limits(LimitsArgs),
    /// Run the internal consistency checks.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Position,
    Momentum,
    Both,
}

impl SpaceArg {
    fn spaces(self) -> Vec<Space> {
        match self {
            SpaceArg::Position => vec![Space::Position],
            SpaceArg::Momentum => vec![Space::Momentum],
            SpaceArg::Both => vec![Space::Position, Space::Momentum],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Closed,
    Functional,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Functional => Method::Functional,
            MethodArg::Oracle => Method::DirectOracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// How `--l` expands into the full μ list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    /// μ = (l, 0, …, 0).
    S,
    /// μ = (l, l, …, l); with l = n − 1 (the default) a circular state.
    Circular,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long = "D", alias = "dim", value_name = "D")]
    pub dim: usize,
    #[arg(long = "Z", alias = "charge", value_name = "Z", default_value_t = 1.0)]
    pub charge: f64,
    #[arg(long)]
    pub n: u32,
    /// Hyperangular quantum numbers μ₁ ≥ … ≥ |μ_{D−1}|, comma separated (μ₁ = l).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["l", "state"])]
    pub mu: Option<Vec<i64>>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long, value_enum)]
    pub state: Option<StateKind>,
}

impl StateArgs {
    pub fn to_spec(&self) -> crate::Result<StateSpec> {
        let mu = match &self.mu {
            Some(mu) => mu.clone(),
            None => {
                let kind = self.state.unwrap_or(StateKind::S);
                let l = match (self.l, kind) {
                    (Some(l), _) => l,
                    (None, StateKind::Circular) => self.n.saturating_sub(1),
                    (None, StateKind::S) => 0,
                } as i64;
                let len = self.dim.saturating_sub(1).max(1);
                match kind {
                    StateKind::S => std::iter::once(l)
                        .chain(std::iter::repeat(0))
                        .take(len)
                        .collect(),
                    StateKind::Circular => vec![l; len],
                }
            }
        };
        StateSpec::new(self.dim, self.charge, self.n, mu)
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, value_enum, default_value = "both")]
    pub space: SpaceArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Significant digits in CSV output.
    #[arg(long, default_value_t = 17)]
    pub digits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Circular,
    Ground,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Dimensions: `a..b` (inclusive) or a comma list.
    #[arg(long = "D", alias = "dim", default_value = "2..10", value_parser = parse_points)]
    pub dims: Points,
    /// Principal quantum numbers: `a..b` (inclusive) or a comma list.
    #[arg(long, default_value = "1..3", value_parser = parse_points)]
    pub n: Points,
    #[arg(long = "Z", alias = "charge", default_value_t = 1.0)]
    pub charge: f64,
    #[arg(long, value_enum, default_value = "circular")]
    pub state: SweepKind,
    #[arg(long, value_enum, default_value = "both")]
    pub space: SpaceArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Emit radial probability densities r^{D−1}R²(r) instead of measures.
    #[arg(long)]
    pub radial_density: bool,
    #[arg(long, default_value_t = 40.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 401)]
    pub r_points: usize,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 17)]
    pub digits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitArg {
    Dimensional,
    Rydberg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    #[value(alias = "pos")]
    Position,
    #[value(alias = "mom")]
    Momentum,
    Product,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    #[arg(long, value_enum)]
    pub limit: LimitArg,
    #[arg(long, value_enum, default_value = "product")]
    pub quantity: QuantityArg,
    /// Fixed n of the dimensional limit.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Fixed D of the Rydberg limit.
    #[arg(long = "D", alias = "dim", default_value_t = 3)]
    pub dim: usize,
    /// Evaluation points (D for the dimensional limit, n for the Rydberg one).
    #[arg(long, value_parser = parse_points)]
    pub at: Option<Points>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Small grid (D ≤ 4, n ≤ 2).
    #[arg(long)]
    pub quick: bool,
    /// Use the x^{−D−5} radial quartic exponent instead of x^{3−D}.
    #[arg(long)]
    pub alt_exponent: bool,
}

/// A list of non-negative integers given as a range or a comma list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Points(pub Vec<u64>);

fn parse_points(s: &str) -> std::result::Result<Points, String> {
    parse_range(s).map(Points)
}

/// Parses `a..b` (inclusive), `a..=b`, or a comma-separated list.
pub fn parse_range(s: &str) -> std::result::Result<Vec<u64>, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|e| format!("bad range start {a:?}: {e}"))?;
        let b: u64 = b
            .trim()
            .parse()
            .map_err(|e| format!("bad range end {b:?}: {e}"))?;
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad value {t:?}: {e}"))
        })
        .collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotConverged { .. } => EXIT_QUADRATURE,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let cfg = QuadratureConfig::from_env();
    let result = match &cli.command {
        Command::Compute(a) => compute(a, &cfg, out),
        Command::Sweep(a) => sweep(a, &cfg, out, err),
        Command::Limits(a) => limits(a, out),
        Command::Validate(a) => return validate(a, &cfg, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn compute(a: &ComputeArgs, cfg: &QuadratureConfig, out: &mut dyn Write) -> CliResult {
    let spec = a.state.to_spec()?;
    let records = a
        .space
        .spaces()
        .into_iter()
        .map(|sp| {
            measure(&spec, sp, a.method.into(), cfg).map(|r| StateRecord::from_report(&spec, &r))
        })
        .collect::<crate::Result<Vec<_>>>()?;
    write_records(&records, a.format, a.digits, out)?;
    Ok(EXIT_OK)
}

fn write_records(
    records: &[StateRecord],
    format: Format,
    digits: usize,
    out: &mut dyn Write,
) -> CliResult {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(STATE_COLUMNS)?;
            for r in records {
                w.write_record(r.csv_fields(digits))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                r.write_text(out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn sweep_specs(a: &SweepArgs) -> crate::Result<Vec<StateSpec>> {
    let mut specs = Vec::new();
    for &d in &a.dims.0 {
        match a.state {
            SweepKind::Ground => specs.push(StateSpec::ground(d as usize, a.charge)?),
            SweepKind::Circular => {
                for &n in &a.n.0 {
                    specs.push(StateSpec::circular(n as u32, d as usize, a.charge)?);
                }
            }
        }
    }
    Ok(specs)
}

fn sweep(
    a: &SweepArgs,
    cfg: &QuadratureConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let specs = sweep_specs(a)?;
    let mut file;
    let sink: &mut dyn Write = match &a.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    let mut w = csv::Writer::from_writer(sink);
    if a.radial_density {
        if a.r_points < 2 || !(a.r_max > 0.0) {
            return Err(Error::InvalidRequest(
                "radial density needs --r-points >= 2 and --r-max > 0".into(),
            )
            .into());
        }
        w.write_record(DENSITY_COLUMNS)?;
        for s in &specs {
            let d = s.dim() as f64;
            for i in 0..a.r_points {
                let r = a.r_max * i as f64 / (a.r_points - 1) as f64;
                let p = if r == 0.0 {
                    0.0
                } else {
                    (s.ln_radial_position_sq(r) + (d - 1.0) * r.ln()).exp()
                };
                w.write_record([
                    s.dim().to_string(),
                    s.n().to_string(),
                    fmt_num(r, a.digits),
                    fmt_num(p, a.digits),
                ])?;
            }
        }
        w.flush()?;
        return Ok(EXIT_OK);
    }
    let method: Method = a.method.into();
    let jobs: Vec<(StateSpec, Space)> = specs
        .iter()
        .flat_map(|s| a.space.spaces().into_iter().map(move |sp| (s.clone(), sp)))
        .collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(s, sp)| measure(s, *sp, method, cfg))
        .collect();
    w.write_record(STATE_COLUMNS)?;
    let mut failures = 0;
    for ((s, sp), r) in jobs.iter().zip(results) {
        let rec = match r {
            Ok(r) => StateRecord::from_report(s, &r),
            Err(e) => {
                failures += 1;
                writeln!(
                    err,
                    "warning: D={} n={} {}: {e}",
                    s.dim(),
                    s.n(),
                    sp.as_str()
                )?;
                StateRecord::failed(s, *sp)
            }
        };
        w.write_record(rec.csv_fields(a.digits))?;
    }
    w.flush()?;
    Ok(if failures > 0 {
        EXIT_QUADRATURE
    } else {
        EXIT_OK
    })
}

fn limits(a: &LimitsArgs, out: &mut dyn Write) -> CliResult {
    let (limit, default_at): (Limit, &[u64]) = match a.limit {
        LimitArg::Dimensional => (Limit::Dimensional, &[10, 20, 50, 100, 200, 300]),
        LimitArg::Rydberg => (Limit::Rydberg, &[10, 20, 50, 100, 200, 500]),
    };
    let quantity = match a.quantity {
        QuantityArg::Position => Quantity::PosComplexity,
        QuantityArg::Momentum => Quantity::MomComplexity,
        QuantityArg::Product => Quantity::Product,
    };
    let points = a.at.clone().map_or_else(|| default_at.to_vec(), |p| p.0);
    let mut rows = Vec::new();
    for &p in &points {
        let (n, dim) = match limit {
            Limit::Dimensional => (a.n, p as usize),
            Limit::Rydberg => (p as u32, a.dim),
        };
        let req = AsymptoticRequest {
            limit,
            quantity,
            n,
            dim,
        };
        let exact = asymptotic::exact(&req)?;
        let asym = asymptotic::asymptotic(&req)?;
        rows.push(serde_json::json!({
            "limit": limit,
            "quantity": quantity,
            "n": n,
            "D": dim,
            "exact_ln": exact.ln_value,
            "asymptotic_ln": asym.ln_value,
            "log_ratio": exact.ln_value / asym.ln_value,
            "ratio": (exact.ln_value - asym.ln_value).exp(),
        }));
    }
    let cols = [
        "limit",
        "quantity",
        "n",
        "D",
        "exact_ln",
        "asymptotic_ln",
        "log_ratio",
        "ratio",
    ];
    let cell = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(x) if x.is_f64() => fmt_num(x.as_f64().unwrap_or(f64::NAN), 17),
        other => other.to_string(),
    };
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(cols)?;
            for r in &rows {
                w.write_record(cols.iter().map(|c| cell(&r[*c])))?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{:>6} {:>6} {:>22} {:>22} {:>12} {:>12}",
                "n", "D", "exact ln C", "asymptotic ln C", "log ratio", "ratio"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>6} {:>6} {:>22.12} {:>22.12} {:>12.8} {:>12.8}",
                    r["n"].as_u64().unwrap_or(0),
                    r["D"].as_u64().unwrap_or(0),
                    r["exact_ln"].as_f64().unwrap_or(f64::NAN),
                    r["asymptotic_ln"].as_f64().unwrap_or(f64::NAN),
                    r["log_ratio"].as_f64().unwrap_or(f64::NAN),
                    r["ratio"].as_f64().unwrap_or(f64::NAN)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn validate(a: &ValidateArgs, cfg: &QuadratureConfig, out: &mut dyn Write) -> i32 {
    let grid = if a.quick {
        validate::Grid::quick()
    } else {
        validate::Grid::full()
    };
    let power = if a.alt_exponent {
        QuarticPower::MinusDMinusFive
    } else {
        QuarticPower::ThreeMinusD
    };
    let outcomes = validate::run_checks(grid, power, cfg);
    let mut all = true;
    for o in &outcomes {
        all &= o.passed;
        let _ = writeln!(
            out,
            "{} {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    let _ = writeln!(
        out,
        "{}/{} checks passed",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    if all {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    }
}
