//! Command-line front end. The `bcbp` binary is a thin wrapper around
//! [`run`], which writes to caller-supplied streams and returns the exit
//! code: 0 success, 1 usage, 2 resource limit, 3 theorem violation.

pub mod cache;
pub mod record;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::analysis::{classify_families, density_stat, expand_folded, SignVector};
use crate::arithmetic::lagrange_coefficients;
use crate::error::Error;
use crate::interpolation::{alternate_signs, gap_from_report, sample_points};
use crate::sieve::{solve_folded, Limits, DEFAULT_MAX_FRONTIER};

pub use cache::ResultCache;
pub use record::{ResultRecord, SCHEMA_VERSION};
pub use verify::{run_suite, Suite, SuiteOutcome, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bcbp", version, about = "Binomial coefficient bisections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the nontrivial folded bisections of one row.
    Solve(SolveArgs),
    /// Nontrivial counts and family marks for a range of rows.
    Table(TableArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
    /// Exact interpolant of the sign-alternated data of a bisection.
    Interpolate(InterpolateArgs),
    /// Gap of a row over all of its bisections.
    Gap(GapArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct RunOptions {
    /// Worker threads (1 = single-threaded).
    #[arg(long, env = "BCBP_THREADS")]
    pub threads: Option<usize>,
    /// Abort a row once the frontier exceeds this many partial assignments.
    #[arg(long, default_value_t = DEFAULT_MAX_FRONTIER)]
    pub max_frontier: u64,
    /// Directory for cached results.
    #[arg(long, env = "BCBP_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Ignore cached results (fresh results are still written).
    #[arg(long)]
    pub recompute: bool,
}

impl RunOptions {
    pub fn limits(&self) -> Limits {
        Limits {
            max_frontier: self.max_frontier,
            threads: self.threads,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 1)]
    pub from: u32,
    #[arg(long)]
    pub to: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Append the fraction of rows with only trivial solutions.
    #[arg(long)]
    pub density: bool,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run (repeatable); all suites when omitted.
    #[arg(long)]
    pub suite: Vec<Suite>,
    #[arg(long, default_value_t = 20)]
    pub max_n: u32,
    #[arg(long, default_value_t = 50)]
    pub max_k: u32,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Args)]
pub struct InterpolateArgs {
    /// Comma-separated sign vector, e.g. `1,-1,-1,1,1,-1,-1,-1,1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "n", required_unless_present = "n")]
    pub signs: Option<String>,
    /// Interpolate one bisection per nontrivial folded solution of row `n`.
    #[arg(long)]
    pub n: Option<u32>,
    /// Also emit this many equally spaced exact samples over `[0, n]`.
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[arg(long)]
    pub n: u32,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Lib(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Lib(e.into())
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::TheoremViolation(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// Parse `args` (program name first) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Table(a) => cmd_table(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Interpolate(a) => cmd_interpolate(&a, out),
        Command::Gap(a) => cmd_gap(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Solve row `n`, consulting the cache unless `recompute` is set.
pub fn solve_record(n: u32, opts: &RunOptions) -> crate::Result<ResultRecord> {
    let cache = opts.cache_dir.as_ref().map(ResultCache::new);
    if let (Some(cache), false) = (&cache, opts.recompute) {
        if let Some(hit) = cache.load(n) {
            return Ok(hit);
        }
    }
    let report = solve_folded(n, &opts.limits())?;
    let record = ResultRecord::from_report(&report);
    if let Some(cache) = &cache {
        cache.store(&record)?;
    }
    Ok(record)
}

fn glyphs(n: u32) -> String {
    classify_families(n as u64)
        .into_iter()
        .map(|t| t.glyph())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let rec = solve_record(a.n, &a.run)?;
    match a.format {
        Format::Json => writeln!(out, "{}", rec.to_json_line()?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "j_hat", "families", "elapsed_ms"])?;
            w.write_record([
                rec.n.to_string(),
                rec.j_hat.to_string(),
                rec.families.join(";"),
                rec.elapsed_ms.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "n = {}  {}", rec.n, glyphs(rec.n))?;
            writeln!(out, "nontrivial solutions: {} (raw {})", rec.j_hat, rec.j_tilde)?;
            writeln!(out, "full bisections: {}", rec.j_full)?;
            writeln!(out, "moduli: [{}]", rec.chain.join(", "))?;
            writeln!(out, "step profile: {:?}", rec.step_profile)?;
            for s in &rec.solutions {
                writeln!(out, "  {s:?}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if a.from == 0 || a.from > a.to {
        return Err(CliError::Usage("need 1 <= --from <= --to".into()));
    }
    let ns: Vec<u32> = (a.from..=a.to).collect();
    let compute = || -> Vec<crate::Result<ResultRecord>> {
        ns.par_iter().map(|&n| solve_record(n, &a.run)).collect()
    };
    let results = match a.run.threads {
        Some(t) if t > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(compute),
        _ => compute(),
    };

    let mut counts = BTreeMap::new();
    let mut rows = Vec::with_capacity(results.len());
    for (n, res) in ns.iter().copied().zip(results) {
        match res {
            Ok(rec) => {
                counts.insert(n, rec.j_hat);
                rows.push((n, Ok(rec)));
            }
            Err(e @ Error::ResourceLimit { .. }) => {
                writeln!(err, "n = {n}: {e}")?;
                rows.push((n, Err(e.to_string())));
            }
            Err(e) => return Err(e.into()),
        }
    }

    match a.format {
        Format::Json => {
            for (n, row) in &rows {
                match row {
                    Ok(rec) => writeln!(out, "{}", rec.to_json_line()?)?,
                    Err(msg) => writeln!(
                        out,
                        "{}",
                        json!({"schema_version": SCHEMA_VERSION, "n": n, "status": "incomplete", "error": msg})
                    )?,
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "j_hat", "families", "elapsed_ms"])?;
            for (n, row) in &rows {
                let families = classify_families(*n as u64)
                    .into_iter()
                    .map(|t| t.name())
                    .collect::<Vec<_>>()
                    .join(";");
                match row {
                    Ok(rec) => w.write_record([
                        n.to_string(),
                        rec.j_hat.to_string(),
                        families,
                        rec.elapsed_ms.to_string(),
                    ])?,
                    Err(_) => w.write_record([
                        n.to_string(),
                        "incomplete".into(),
                        families,
                        String::new(),
                    ])?,
                }
            }
            w.flush()?;
        }
        Format::Text => {
            for (n, row) in &rows {
                let value = match row {
                    Ok(rec) => rec.j_hat.to_string(),
                    Err(_) => "incomplete".into(),
                };
                writeln!(out, "{n:>5} {value:>10}  {}", glyphs(*n))?;
            }
        }
    }

    if a.density {
        if a.from != 1 {
            writeln!(err, "density needs a range starting at 1")?;
        } else {
            match density_stat(&counts, a.to) {
                Ok(d) => {
                    let zero = counts.values().filter(|&&c| c == 0).count();
                    match a.format {
                        Format::Json => writeln!(
                            out,
                            "{}",
                            json!({"density": d.to_string(), "zero_rows": zero, "rows": a.to})
                        )?,
                        Format::Csv => writeln!(out, "# density {zero}/{} = {d}", a.to)?,
                        Format::Text => writeln!(out, "density {zero}/{} = {d}", a.to)?,
                    }
                }
                Err(e) => writeln!(err, "density unavailable: {e}")?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let params = VerifyParams {
        max_n: a.max_n,
        max_k: a.max_k,
        limits: a.run.limits(),
    };
    let suites = if a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite.clone()
    };
    let mut code = EXIT_OK;
    for suite in suites {
        let outcome = run_suite(suite, &params);
        let status = if outcome.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<11} {:>7} checks  ({})",
            outcome.suite.name(),
            outcome.cases,
            outcome.scope
        )?;
        for f in &outcome.failures {
            writeln!(err, "  {}: {f}", outcome.suite.name())?;
        }
        if !outcome.passed() {
            code = EXIT_VIOLATION;
        }
    }
    Ok(code)
}

fn parse_signs(text: &str) -> Result<SignVector, CliError> {
    let entries = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t {
                "1" | "+1" => Ok(1),
                "-1" => Ok(-1),
                _ => Err(CliError::Usage(format!("entry {t:?} is not +1 or -1"))),
            }
        })
        .collect::<Result<Vec<i8>, _>>()?;
    if entries.len() < 2 {
        return Err(CliError::Usage("need at least two signs".into()));
    }
    Ok(SignVector::from_entries(entries)?)
}

fn interpolation_json(delta: &SignVector, samples: Option<usize>) -> Result<serde_json::Value, CliError> {
    let data: Vec<i8> = alternate_signs(delta.entries());
    let big: Vec<BigInt> = data.iter().map(|&v| BigInt::from(v)).collect();
    let poly = lagrange_coefficients(&big)?;
    let mut value = json!({
        "n": delta.n(),
        "signs": delta.entries(),
        "data": data,
        "degree": poly.degree(),
        "bisects": delta.bisects_row(),
        "coefficients": poly.coefficient_strings(),
        "polynomial": poly.to_string(),
    });
    if let Some(count) = samples {
        let points: Vec<[String; 2]> = sample_points(&poly, delta.n(), count)?
            .into_iter()
            .map(|(x, y)| [x.to_string(), y.to_string()])
            .collect();
        value["samples"] = json!(points);
    }
    Ok(value)
}

fn cmd_interpolate(a: &InterpolateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(text) = &a.signs {
        let delta = parse_signs(text)?;
        writeln!(out, "{}", interpolation_json(&delta, a.samples)?)?;
        return Ok(EXIT_OK);
    }
    let n = a.n.expect("clap enforces --signs or --n");
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let report = solve_folded(n, &a.run.limits())?;
    for folded in &report.solutions {
        let first = expand_folded(folded)?
            .into_iter()
            .next()
            .expect("every folded solution unfolds");
        writeln!(out, "{}", interpolation_json(&first, a.samples)?)?;
    }
    Ok(EXIT_OK)
}

fn cmd_gap(a: &GapArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let report = solve_folded(a.n, &a.run.limits())?;
    let gap = gap_from_report(&report)?;
    let per_solution: Vec<_> = gap
        .per_solution
        .iter()
        .map(|(delta, g)| json!({"signs": delta.entries(), "gap": g}))
        .collect();
    let histogram: BTreeMap<String, u64> = gap
        .histogram
        .iter()
        .map(|(g, c)| (g.to_string(), *c))
        .collect();
    let value = json!({
        "n": gap.n,
        "gamma": gap.gamma,
        "witness": gap.witness.as_ref().map(|w| w.entries().to_vec()),
        "solutions": report.j_full.to_string(),
        "histogram": histogram,
        "per_solution": per_solution,
    });
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}
