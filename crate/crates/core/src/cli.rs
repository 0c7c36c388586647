//! The `arr4` command line: argument types, command implementations and
//! their text/JSON renderings. The binary only parses and dispatches.
//!
//! Exit codes: 0 success, 1 failed verification or other failure, 2 parse
//! error (including bad usage), 3 validation error, 4 unknown label or no
//! vectors for the label.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::catalogue::{self, CatalogueError, CatalogueVerification, RowReport, Status};
use crate::chambers::ChamberError;
use crate::io::{self, LoadError};
use crate::report::{analyze, ChamberPolicy, ReportDocument, DEFAULT_CHAMBER_THRESHOLD};

/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "ARR4_THREADS";

#[derive(Debug, Parser)]
#[command(name = "arr4", version, about = "Exact invariants of hyperplane arrangements in P³")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the invariant report of an arrangement file.
    Analyze(AnalyzeArgs),
    /// Write the canonical file of a built-in arrangement.
    Generate {
        /// Catalogue label such as `A^3_1(28)`, or A4, D4, B4, F4, H4.
        label: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Inspect and verify the embedded catalogue.
    #[command(subcommand)]
    Catalogue(CatalogueCommand),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Enumerate chambers regardless of size.
    #[arg(long, conflicts_with = "no_chambers")]
    pub chambers: bool,
    /// Never enumerate chambers.
    #[arg(long)]
    pub no_chambers: bool,
    /// Stop enumeration after this many chambers and mark the result partial.
    #[arg(long, value_name = "N")]
    pub max_chambers: Option<usize>,
}

impl AnalyzeArgs {
    pub fn policy(&self) -> ChamberPolicy {
        policy(self.chambers, self.no_chambers)
    }
}

fn policy(chambers: bool, no_chambers: bool) -> ChamberPolicy {
    match (chambers, no_chambers) {
        (true, _) => ChamberPolicy::Always,
        (_, true) => ChamberPolicy::Never,
        _ => ChamberPolicy::Auto,
    }
}

#[derive(Debug, Subcommand)]
pub enum CatalogueCommand {
    /// Print every row of the table.
    List,
    /// Verify one row, or all rows with `--all`.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        label: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        /// Also enumerate chambers above the default size threshold.
        #[arg(long)]
        chambers: bool,
    },
    /// Write the table as JSON.
    Export {
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Catalogue(#[from] CatalogueError),
    #[error(transparent)]
    Chamber(#[from] ChamberError),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{THREADS_ENV} must be a positive integer, got `{0}`")]
    Threads(String),
    #[error("{0} row(s) failed verification")]
    VerificationFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Load(LoadError::Parse(_)) | CliError::Threads(_) => 2,
            CliError::Load(LoadError::Invalid(_)) => 3,
            CliError::Catalogue(CatalogueError::UnknownLabel(_) | CatalogueError::NoVectorsAvailable(_)) => 4,
            CliError::Catalogue(CatalogueError::Arrangement(_)) => 3,
            _ => 1,
        }
    }
}

/// Reads `ARR4_THREADS`-style values: `None` when unset.
pub fn parse_threads(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Threads(v.to_string())),
        },
    }
}

/// Sizes the global worker pool from the environment. Call once, early.
pub fn configure_threads() -> Result<(), CliError> {
    let value = std::env::var(THREADS_ENV).ok();
    if let Some(n) = parse_threads(value.as_deref())? {
        // fails only if a pool already exists, which then stays in charge
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<ReportDocument, CliError> {
    let a = io::read_arrangement(&args.path)?;
    Ok(analyze(&a, args.policy(), args.max_chambers)?)
}

/// Writes the canonical file of a built-in and returns its line count.
pub fn cmd_generate(label: &str, output: &Path) -> Result<usize, CliError> {
    let a = catalogue::builtin(label)?;
    io::write_arrangement(&a, output).map_err(|source| CliError::Write { path: output.display().to_string(), source })?;
    Ok(a.len())
}

pub fn cmd_export(output: &Path) -> Result<(), CliError> {
    std::fs::write(output, to_json(&catalogue::entries()))
        .map_err(|source| CliError::Write { path: output.display().to_string(), source })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_report(r: &ReportDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n             {}", r.n);
    let _ = writeln!(s, "field         {}", r.field.name());
    let _ = writeln!(s, "h-vector      {}", r.h_vector);
    let _ = writeln!(s, "t-vector      {}", r.t_vector);
    let _ = writeln!(s, "f-vector      {}", r.f_vector);
    let chi: Vec<String> = r.char_poly.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "χ coefficients [{}] = {}", chi.join(", "), r.char_poly_factored);
    let _ = writeln!(s, "real-rooted   {}", yes_no(r.real_rooted));
    let _ = writeln!(s, "simplicial    {} (by {})", yes_no(r.simplicial), r.simplicial_source);
    let _ = writeln!(s, "simply laced  {}", yes_no(r.simply_laced));
    let _ = writeln!(s, "irreducible   {} ({} component(s))", yes_no(r.irreducible), r.components.len());
    let _ = writeln!(s, "multiplicity  {}", r.multiplicity);
    match &r.chambers {
        Some(c) => {
            let walls: Vec<String> = c.wall_counts.iter().map(|(w, k)| format!("{w} walls: {k}")).collect();
            let types: Vec<String> = c.diagram_types.iter().map(|(t, k)| format!("{t}: {k}")).collect();
            let partial = if c.complete { "" } else { " (partial: --max-chambers reached)" };
            let _ = writeln!(s, "chambers      {}{partial}", c.count);
            let _ = writeln!(s, "  {}", walls.join(", "));
            let _ = writeln!(s, "  diagrams {}", types.join(", "));
        }
        None => {
            let _ = writeln!(s, "chambers      not enumerated (default only for n ≤ {DEFAULT_CHAMBER_THRESHOLD}; use --chambers)");
        }
    }
    let _ = writeln!(s, "checks");
    for c in r.checks() {
        let _ = writeln!(s, "  {c}");
    }
    for d in &r.diagnostics {
        let _ = writeln!(s, "diagnostic    {d}");
    }
    s
}

pub fn render_list() -> String {
    let mut s = String::new();
    for e in catalogue::entries() {
        let vectors = if e.has_vectors { "vectors" } else { "data" };
        let _ = writeln!(
            s,
            "{:<10} n={:<3} h={:<22} t={:<44} f={:<28} {vectors:<7} {}",
            e.label,
            e.n,
            e.h.to_string(),
            e.t.to_string(),
            e.f.to_string(),
            e.comments
        );
    }
    s
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skip => "skip",
    }
}

pub fn render_row(r: &RowReport, all_checks: bool) -> String {
    let mut s = format!("{:<10} {} passed, {} failed, {} skipped\n", r.label, r.passed, r.failed, r.skipped);
    for c in r.checks.iter().filter(|c| all_checks || c.status == Status::Fail) {
        let _ = writeln!(s, "  {} {}: {}", status_word(c.status), c.name, c.detail);
    }
    s
}

pub fn render_verification(v: &CatalogueVerification) -> String {
    let mut s: String = v.reports.iter().map(|r| render_row(r, false)).collect();
    let _ = writeln!(s, "{} rows, {} failed", v.rows, v.failed_rows);
    s
}

/// Runs one parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let emit = |out: &mut dyn Write, text: String| {
        // a closed stdout is not an error worth reporting
        let _ = out.write_all(text.as_bytes());
    };
    match &cli.command {
        Command::Analyze(args) => {
            let r = cmd_analyze(args)?;
            emit(out, if args.json { to_json(&r) } else { render_report(&r) });
        }
        Command::Generate { label, output } => {
            let n = cmd_generate(label, output)?;
            emit(out, format!("wrote {n} hyperplanes to {}\n", output.display()));
        }
        Command::Catalogue(CatalogueCommand::List) => emit(out, render_list()),
        Command::Catalogue(CatalogueCommand::Export { output }) => {
            cmd_export(output)?;
            emit(out, format!("wrote {} rows to {}\n", catalogue::entries().len(), output.display()));
        }
        Command::Catalogue(CatalogueCommand::Verify { label, all, json, chambers }) => {
            let policy = policy(*chambers, false);
            let failed = if *all {
                let v = catalogue::verify_all(policy);
                emit(out, if *json { to_json(&v) } else { render_verification(&v) });
                v.failed_rows
            } else {
                let r = catalogue::verify_row(label.as_deref().unwrap_or_default(), policy)?;
                emit(out, if *json { to_json(&r) } else { render_row(&r, true) });
                usize::from(!r.ok())
            };
            if failed > 0 {
                return Err(CliError::VerificationFailed(failed));
            }
        }
    }
    Ok(())
}

/// Full entry point: parses `args`, runs, and returns the exit code.
/// Diagnostics go to `err` as one line.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match configure_threads().and_then(|()| run(&cli, out)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "arr4: {e}");
            e.exit_code()
        }
    }
}
