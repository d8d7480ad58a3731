//! The `dars` command line. Every command writes library results serialized
//! as JSON (or a rendered picture) to stdout and diagnostics to stderr.

pub mod render;

use std::io::Write;

use affine_growth::GrowthError;
use affine_permutation::{AffineError, AffinePermutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use classical_rs::{realizations_agree, rs_insertion, ClassicalError, FinitePermutation};
use combinatorics_core::{CoreError, Partition, Tabloid};
use dars::{forward, inverse, validate, DarsError, DarsTuple};
use oracles_verification::{
    affine_evacuation_of, evacuate_tabloid, run_suites, tuple_round_trip, Enumeration, OracleError, Suite,
};
use serde::Serialize;
use thiserror::Error;

pub use render::{Format, RenderSpec, PALETTE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

/// Largest Coxeter length `verify` and `enumerate` accept.
pub const MAX_LENGTH_LIMIT: usize = 14;
/// Largest rank `verify` and `enumerate` accept.
pub const MAX_RANK: usize = 8;
/// Largest |λ| for the reverse round trip.
pub const MAX_LAMBDA_LIMIT: usize = 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("validation failed: condition {condition}: {detail}")]
    Invalid { condition: String, detail: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Invalid { .. } => EXIT_INVALID,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl From<AffineError> for CliError {
    fn from(e: AffineError) -> Self {
        match e {
            AffineError::BoundTooLarge(_) => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ClassicalError> for CliError {
    fn from(e: ClassicalError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        match e {
            GrowthError::RegionTooLarge { .. } | GrowthError::NoStableWindow { .. } => CliError::Resource(e.to_string()),
            GrowthError::OutOfRegion(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<DarsError> for CliError {
    fn from(e: DarsError) -> Self {
        match e {
            DarsError::Growth(g) => g.into(),
            DarsError::Core(c) => c.into(),
            DarsError::InvalidTuple { condition, detail } => CliError::Invalid { condition: condition.into(), detail },
            DarsError::ShapeMismatch(_) | DarsError::Json(_) => CliError::Usage(e.to_string()),
            DarsError::Reconstruction(_) => CliError::Resource(e.to_string()),
            DarsError::Inconsistent(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Dars(d) => d.into(),
            OracleError::Affine(a) => a.into(),
            OracleError::Core(c) => c.into(),
            OracleError::NoStabilization { .. } | OracleError::NoWitness { .. } => CliError::Resource(e.to_string()),
            OracleError::NonzeroIndex(_) | OracleError::UnknownSuite(_) => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dars", version, about = "Dual affine Robinson-Schensted correspondence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tuple (P, Q, lambda, N0) of an affine permutation.
    Compute {
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Also run classical RS on the window and compare.
        #[arg(long)]
        embed_check: bool,
    },
    /// Affine permutation of a tuple.
    Invert(TupleArgs),
    /// Condition-by-condition report for a tuple.
    Validate(TupleArgs),
    /// Run verification suites, one JSON line per check.
    Verify(VerifyArgs),
    /// List permutations with their tuples as JSON lines.
    Enumerate(RangeArgs),
    /// Draw a slice of the growth diagram.
    Render(RenderArgs),
    /// Evacuate a tabloid, or compute the affine evacuation of a permutation.
    Evac {
        #[arg(long, conflicts_with = "window", required_unless_present = "window")]
        tabloid: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Classical RS of a finite permutation.
    Classical {
        #[arg(long)]
        perm: String,
    },
}

#[derive(Debug, Args)]
pub struct TupleArgs {
    /// Rows separated by '/', entries by ','.
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
    /// Parts separated by ','; empty for the empty partition.
    #[arg(long, default_value = "")]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub n0: i64,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub n: usize,
    /// Coxeter length bound (default 6 when no box is given).
    #[arg(long, conflicts_with_all = ["lo", "hi"])]
    pub max_length: Option<usize>,
    /// Index cosets for --max-length, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1")]
    pub indices: Vec<i64>,
    /// Window entries at least this.
    #[arg(long, allow_hyphen_values = true, requires = "hi")]
    pub lo: Option<i64>,
    /// Window entries at most this.
    #[arg(long, allow_hyphen_values = true, requires = "lo")]
    pub hi: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    All,
    Roundtrip,
    Oracle,
    Symmetry,
    Evacuation,
    Index,
    Invariants,
    ReverseRoundtrip,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteChoice,
    /// |lambda| bound for reverse-roundtrip.
    #[arg(long, default_value_t = 6)]
    pub max_lambda: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatChoice {
    Ascii,
    Svg,
    Json,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub window: String,
    #[arg(long, value_enum, default_value = "ascii")]
    pub format: FormatChoice,
    /// Inclusive window range "a..b".
    #[arg(long, allow_hyphen_values = true)]
    pub windows: Option<String>,
    #[arg(long)]
    pub colors: bool,
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub partitions: bool,
}

pub fn parse_window(s: &str) -> Result<AffinePermutation, CliError> {
    Ok(s.parse::<AffinePermutation>()?)
}

pub fn parse_lambda(s: &str) -> Result<Partition, CliError> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|e| CliError::Usage(format!("lambda part {x:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

pub fn parse_tuple(a: &TupleArgs) -> Result<DarsTuple, CliError> {
    let p: Tabloid = a.p.parse()?;
    let q: Tabloid = a.q.parse()?;
    if p.n() != q.n() {
        return Err(CliError::Usage(format!("P has {} entries but Q has {}", p.n(), q.n())));
    }
    Ok(DarsTuple::new(p, q, parse_lambda(&a.lambda)?, a.n0))
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = s.split_once("..").ok_or_else(|| CliError::Usage(format!("window range {s:?} is not a..b")))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| CliError::Usage(format!("window range {s:?}: {e}")));
    Ok((num(a)?, num(b)?))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn enumeration(r: &RangeArgs) -> Result<Enumeration, CliError> {
    if r.n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2 (got {})", r.n)));
    }
    if r.n > MAX_RANK {
        return Err(CliError::Resource(format!("n = {} exceeds the limit {MAX_RANK}", r.n)));
    }
    Ok(match (r.lo, r.hi) {
        (Some(lo), Some(hi)) => Enumeration::Box { n: r.n, lo, hi },
        _ => {
            let max_len = r.max_length.unwrap_or(6);
            if max_len > MAX_LENGTH_LIMIT {
                return Err(CliError::Resource(format!("length {max_len} exceeds the limit {MAX_LENGTH_LIMIT}")));
            }
            Enumeration::Length { n: r.n, max_len, indices: r.indices.clone() }
        }
    })
}

#[derive(Serialize)]
struct EmbedCheck {
    classical_p: String,
    classical_q: String,
    lambda_empty: bool,
    n0_is_two: bool,
    rows_match: bool,
}

fn tabloid_of(t: &combinatorics_core::StandardTableau) -> Result<Tabloid, CliError> {
    Ok(Tabloid::new(t.rows().to_vec())?)
}

pub fn cmd_compute(window: &str, embed_check: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = parse_window(window)?;
    let t = forward(&w)?;
    json_line(out, &t)?;
    if !embed_check {
        return Ok(EXIT_OK);
    }
    let values: Vec<usize> = w
        .window()
        .iter()
        .map(|&v| usize::try_from(v).ok().filter(|&v| (1..=w.n()).contains(&v)))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::Usage(format!("{w} is not a permutation of 1..{}", w.n())))?;
    let fp = FinitePermutation::new(values)?;
    let (p, q) = rs_insertion(&fp);
    let rows_match = t.pbar == tabloid_of(&p)? && t.qbar == tabloid_of(&q)?;
    let check = EmbedCheck {
        classical_p: p.to_string(),
        classical_q: q.to_string(),
        lambda_empty: t.lambda.is_empty(),
        n0_is_two: t.n0 == 2,
        rows_match,
    };
    json_line(out, &check)?;
    if check.lambda_empty && check.n0_is_two && check.rows_match {
        Ok(EXIT_OK)
    } else {
        Err(CliError::Invalid { condition: "embedding".into(), detail: "classical RS disagrees".into() })
    }
}

pub fn cmd_invert(a: &TupleArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = inverse(&parse_tuple(a)?)?;
    writeln!(out, "{w}")?;
    Ok(EXIT_OK)
}

pub fn cmd_validate(a: &TupleArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = validate(&parse_tuple(a)?);
    json_line(out, &report)?;
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_INVALID })
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let e = enumeration(&a.range)?;
    let mut failed_write = None;
    let mut sink = |r: &oracles_verification::CheckRecord| {
        if failed_write.is_none() {
            failed_write = json_line(out, r).err();
        }
    };
    let report = match a.suite {
        SuiteChoice::ReverseRoundtrip => {
            if a.max_lambda > MAX_LAMBDA_LIMIT {
                return Err(CliError::Resource(format!("|lambda| {} exceeds the limit {MAX_LAMBDA_LIMIT}", a.max_lambda)));
            }
            tuple_round_trip(e.n(), a.max_lambda, &mut sink)
        }
        choice => {
            let suites: Vec<Suite> = match choice {
                SuiteChoice::All => Suite::ALL.to_vec(),
                SuiteChoice::Roundtrip => vec![Suite::RoundTrip],
                SuiteChoice::Oracle => vec![Suite::Oracle],
                SuiteChoice::Symmetry => vec![Suite::Symmetry],
                SuiteChoice::Evacuation => vec![Suite::Evacuation],
                SuiteChoice::Index => vec![Suite::Index],
                _ => vec![Suite::Invariants],
            };
            run_suites(&e, &suites, &mut sink)?
        }
    };
    if let Some(err) = failed_write {
        return Err(err);
    }
    json_line(out, &serde_json::json!({ "summary": report.counts, "total": report.total() }))?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct EnumeratedLine<'a> {
    window: String,
    tuple: &'a DarsTuple,
}

pub fn cmd_enumerate(r: &RangeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    for w in enumeration(r)?.elements()? {
        let t = forward(&w)?;
        json_line(out, &EnumeratedLine { window: w.to_string(), tuple: &t })?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = parse_window(&a.window)?;
    let spec = RenderSpec {
        format: match a.format {
            FormatChoice::Ascii => Format::Ascii,
            FormatChoice::Svg => Format::Svg,
            FormatChoice::Json => Format::Json,
        },
        windows: a.windows.as_deref().map(parse_range).transpose()?,
        show_colors: a.colors,
        show_labels: a.labels,
        show_partitions: a.partitions,
    };
    out.write_all(render::render(&w, &spec)?.as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_evac(tabloid: Option<&str>, window: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    let value = match (tabloid, window) {
        (Some(t), _) => {
            let t: Tabloid = t.parse()?;
            serde_json::json!({ "tabloid": t.to_string(), "evacuation": evacuate_tabloid(&t)?.to_string() })
        }
        (None, Some(w)) => {
            let w = parse_window(w)?;
            serde_json::json!({ "window": w.to_string(), "evacuation": affine_evacuation_of(&w)?.to_string() })
        }
        (None, None) => return Err(CliError::Usage("give --tabloid or --window".into())),
    };
    json_line(out, &value)?;
    Ok(EXIT_OK)
}

pub fn cmd_classical(perm: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let w: FinitePermutation = perm.parse()?;
    let (p, q) = rs_insertion(&w);
    let value = serde_json::json!({
        "perm": w.values(),
        "p": p.to_string(),
        "q": q.to_string(),
        "shape": p.shape().parts(),
        "realizations_agree": realizations_agree(&w),
    });
    json_line(out, &value)?;
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Compute { window, embed_check } => cmd_compute(window, *embed_check, out),
        Command::Invert(a) => cmd_invert(a, out),
        Command::Validate(a) => cmd_validate(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Enumerate(r) => cmd_enumerate(r, out),
        Command::Render(a) => cmd_render(a, out),
        Command::Evac { tabloid, window } => cmd_evac(tabloid.as_deref(), window.as_deref(), out),
        Command::Classical { perm } => cmd_classical(perm, out),
    }
}

/// Runs the command and reports failures on `err`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        // a closed pipe (e.g. `| head`) is not a failure
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "dars: {e}");
            e.exit_code()
        }
    }
}
