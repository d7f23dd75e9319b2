//! Command-line front end for the identity catalog.
//!
//! `parse_args` turns argv into a validated [`RunConfig`]; [`run`] evaluates
//! it and writes a CSV, JSON or plain-text table. Exit status is 0 when every
//! in-domain record is `ok`, 1 on any residual breach and 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperpi::catalog::{
    self, grid, list_identities, Family, Flag, Params, PiIdentity, SweepSummary, VerificationRecord,
};
use hyperpi::quadrature::DEFAULT_TOL;
use serde::Serialize;
use thiserror::Error;

pub const MIN_TOL: f64 = 1e-12;
pub const MAX_TOL: f64 = 1e-4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// `--help` or `--version`; the payload is the text to print.
    #[error("{0}")]
    Info(String),
    #[error(transparent)]
    Library(#[from] hyperpi::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Values for one parameter: a single number or `start:stop:count`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpec {
    pub name: String,
    pub values: ParamValues,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValues {
    Single(f64),
    Range { start: f64, stop: f64, count: usize },
}

impl ParamValues {
    /// Evenly spaced, endpoints included; `count = 1` gives `start`.
    pub fn expand(&self) -> Vec<f64> {
        match *self {
            ParamValues::Single(v) => vec![v],
            ParamValues::Range { start, count: 1, .. } => vec![start],
            ParamValues::Range { start, stop, count } => {
                let step = (stop - start) / (count - 1) as f64;
                (0..count)
                    .map(|i| if i + 1 == count { stop } else { start + step * i as f64 })
                    .collect()
            }
        }
    }
}

fn parse_number(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not finite: {s:?}"))
    }
}

impl FromStr for ParamSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rhs) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("bad parameter name {name:?}"));
        }
        let fields: Vec<&str> = rhs.split(':').collect();
        let values = match fields.as_slice() {
            [v] => ParamValues::Single(parse_number(v)?),
            [start, stop, count] => {
                let (start, stop) = (parse_number(start)?, parse_number(stop)?);
                let count: usize = count.trim().parse().map_err(|_| format!("bad count {count:?}"))?;
                if count == 0 {
                    return Err("range count must be at least 1".into());
                }
                if start > stop {
                    return Err(format!("range start {start} exceeds stop {stop}"));
                }
                ParamValues::Range { start, stop, count }
            }
            _ => return Err(format!("expected value or start:stop:count, got {rhs:?}")),
        };
        Ok(ParamSpec { name: name.to_string(), values })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    List,
    Verify,
    Sweep,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Selection {
    All,
    One(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub identity: Selection,
    pub params: Vec<ParamSpec>,
    /// Use each identity's default grid; implied when no parameters are given.
    pub default_grid: bool,
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Parser)]
#[command(name = "hyperpi", version, about = "Verify the pi identity catalog")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries
    List(OutputArgs),
    /// Evaluate identities at given points
    Verify(EvalArgs),
    /// Evaluate identities over parameter grids
    Sweep(EvalArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Identity id, or "all"
    #[arg(long)]
    identity: Option<String>,
    /// name=value or name=start:stop:count
    #[arg(long = "param")]
    params: Vec<String>,
    /// Use the identity's built-in grid
    #[arg(long)]
    default_grid: bool,
    /// Quadrature and series tolerance, within [1e-12, 1e-4]
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
    /// Identity (when --identity is absent) followed by name=value assignments
    #[arg(value_name = "ARGS")]
    positional: Vec<String>,
}

/// Parses argv, including the program name in position 0.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp
        | clap::error::ErrorKind::DisplayVersion
        | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => CliError::Info(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    match cli.command {
        Command::List(o) => Ok(RunConfig {
            mode: Mode::List,
            identity: Selection::All,
            params: Vec::new(),
            default_grid: false,
            tol: DEFAULT_TOL,
            format: o.format,
            out: o.out,
        }),
        Command::Verify(args) => eval_config(Mode::Verify, args),
        Command::Sweep(args) => eval_config(Mode::Sweep, args),
    }
}

fn eval_config(mode: Mode, args: EvalArgs) -> Result<RunConfig, CliError> {
    let mut positional = args.positional.into_iter();
    let id = match args.identity {
        Some(id) => id,
        None => positional.next().ok_or_else(|| usage("missing identity (use --identity ID or \"all\")"))?,
    };
    let identity = if id == "all" {
        Selection::All
    } else {
        Selection::One(catalog::find(&id).map_err(|e| usage(e.to_string()))?.id)
    };

    let mut params = Vec::new();
    for raw in args.params.iter().map(String::as_str).chain(positional.as_ref().iter().map(String::as_str)) {
        params.push(ParamSpec::from_str(raw).map_err(usage)?);
    }
    let mut seen = std::collections::HashSet::new();
    for p in &params {
        if !seen.insert(p.name.clone()) {
            return Err(usage(format!("parameter {} given twice", p.name)));
        }
    }
    let allowed: &[&str] = match identity {
        Selection::One(id) => catalog::find(id)?.family.param_names(),
        Selection::All => &["a", "b"],
    };
    if let Some(p) = params.iter().find(|p| !allowed.contains(&p.name.as_str())) {
        return Err(usage(format!("unknown parameter {:?}; expected one of {allowed:?}", p.name)));
    }
    if args.default_grid && !params.is_empty() {
        return Err(usage("--default-grid cannot be combined with parameters"));
    }
    if !params.is_empty() {
        if let Some(missing) = allowed.iter().find(|n| !params.iter().any(|p| p.name == **n)) {
            return Err(usage(format!("missing parameter {missing}")));
        }
    }
    if !(MIN_TOL..=MAX_TOL).contains(&args.tol) {
        return Err(usage(format!("--tol must lie in [{MIN_TOL:e}, {MAX_TOL:e}], got {}", args.tol)));
    }
    Ok(RunConfig {
        mode,
        default_grid: args.default_grid || params.is_empty(),
        identity,
        params,
        tol: args.tol,
        format: args.output.format,
        out: args.output.out,
    })
}

fn axis(params: &[ParamSpec], name: &str) -> Vec<f64> {
    params
        .iter()
        .find(|p| p.name == name)
        .map(|p| p.values.expand())
        .unwrap_or_default()
}

fn points_for(entry: &PiIdentity, config: &RunConfig) -> Vec<Params> {
    if config.default_grid {
        return entry.default_grid();
    }
    let b = axis(&config.params, "b");
    match entry.family {
        Family::OneParameter => grid(entry.family, &[], &b),
        family => grid(family, &axis(&config.params, "a"), &b),
    }
}

fn selected(config: &RunConfig) -> Vec<&'static PiIdentity> {
    match config.identity {
        Selection::All => list_identities().iter().collect(),
        Selection::One(id) => list_identities().iter().filter(|e| e.id == id).collect(),
    }
}

/// Evaluates the configured identities in catalog order, grid order within each.
pub fn evaluate(config: &RunConfig) -> Result<Vec<VerificationRecord>, CliError> {
    let mut out = Vec::new();
    for entry in selected(config) {
        let sweep = catalog::sweep(entry.id, &points_for(entry, config), config.tol)?;
        out.extend(sweep.records);
    }
    Ok(out)
}

#[derive(Serialize)]
struct Report<'a> {
    records: &'a [VerificationRecord],
    summary: &'a SweepSummary,
}

#[derive(Serialize)]
struct ListEntry {
    id: &'static str,
    arity: usize,
    params: &'static [&'static str],
    domain: &'static str,
    anchor: &'static str,
}

fn list_entries() -> Vec<ListEntry> {
    list_identities()
        .iter()
        .map(|e| ListEntry {
            id: e.id,
            arity: e.arity(),
            params: e.family.param_names(),
            domain: e.domain_text(),
            anchor: e.anchor,
        })
        .collect()
}

pub fn render_list(format: Format) -> Result<String, CliError> {
    let entries = list_entries();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&entries)? + "\n",
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["id", "arity", "params", "domain", "anchor"])?;
            for e in &entries {
                w.write_record([e.id, &e.arity.to_string(), &e.params.join(" "), e.domain, e.anchor])?;
            }
            into_string(w)?
        }
        Format::Pretty => {
            let mut s = String::new();
            for e in &entries {
                let _ = writeln!(s, "{:<16} {:<6} {:<22} {}", e.id, e.params.join(","), e.domain, e.anchor);
            }
            s
        }
    })
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// 17 significant digits.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub const CSV_HEADER: [&str; 8] = ["identity", "a", "b", "pi_computed", "residual", "flag", "route_values", "note"];

pub fn render_csv(records: &[VerificationRecord]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in records {
        let routes = r
            .route_values
            .iter()
            .map(|(k, v)| format!("{k}={}", num(*v)))
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            r.id.as_str(),
            &r.params.a.map(num).unwrap_or_default(),
            &num(r.params.b),
            &num(r.pi_computed),
            &num(r.residual),
            r.flag.as_str(),
            &routes,
            &r.note,
        ])?;
    }
    into_string(w)
}

/// One row of an emitted CSV table.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub identity: String,
    pub a: Option<f64>,
    pub b: f64,
    pub pi_computed: f64,
    pub residual: f64,
    pub flag: Flag,
    pub route_values: Vec<(String, f64)>,
    pub note: String,
}

#[derive(Debug, Error, PartialEq)]
#[error("line {line}: {message}")]
pub struct CsvParseError {
    pub line: u64,
    pub message: String,
}

fn parse_float(s: &str) -> Option<f64> {
    s.parse().ok()
}

/// Reads a table produced by [`render_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, CsvParseError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header_err = |message: String| CsvParseError { line: 1, message };
    let headers = reader.headers().map_err(|e| header_err(e.to_string()))?;
    if headers.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(header_err(format!("unexpected header {headers:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CsvParseError {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let bad = |what: &str| CsvParseError { line, message: format!("bad {what}") };
        if record.len() != CSV_HEADER.len() {
            return Err(bad("field count"));
        }
        let a = match &record[1] {
            "" => None,
            s => Some(parse_float(s).ok_or_else(|| bad("a"))?),
        };
        let mut route_values = Vec::new();
        if !record[6].is_empty() {
            for item in record[6].split(';') {
                let (k, v) = item.split_once('=').ok_or_else(|| bad("route value"))?;
                route_values.push((k.to_string(), parse_float(v).ok_or_else(|| bad("route value"))?));
            }
        }
        rows.push(CsvRow {
            identity: record[0].to_string(),
            a,
            b: parse_float(&record[2]).ok_or_else(|| bad("b"))?,
            pi_computed: parse_float(&record[3]).ok_or_else(|| bad("pi_computed"))?,
            residual: parse_float(&record[4]).ok_or_else(|| bad("residual"))?,
            flag: Flag::parse(&record[5]).ok_or_else(|| bad("flag"))?,
            route_values,
            note: record[7].to_string(),
        });
    }
    Ok(rows)
}

pub fn render_pretty(records: &[VerificationRecord], summary: &SweepSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {:>8} {:>8} {:>22} {:>10}  flag", "identity", "a", "b", "pi_computed", "residual");
    for r in records {
        let a = r.params.a.map(|a| format!("{a:.4}")).unwrap_or_else(|| "-".into());
        let _ = write!(
            s,
            "{:<16} {:>8} {:>8.4} {:>22.16} {:>10.2e}  {}",
            r.id,
            a,
            r.params.b,
            r.pi_computed,
            r.residual,
            r.flag.as_str()
        );
        if !r.note.is_empty() {
            let _ = write!(s, " ({})", r.note);
        }
        s.push('\n');
    }
    let _ = writeln!(
        s,
        "{} records: {} ok, {} reduced_accuracy, {} out_of_domain; max residual {:.2e}",
        summary.total, summary.ok, summary.reduced_accuracy, summary.out_of_domain, summary.max_residual
    );
    s
}

pub fn render(records: &[VerificationRecord], format: Format) -> Result<String, CliError> {
    let summary = SweepSummary::from_records(records);
    Ok(match format {
        Format::Csv => render_csv(records)?,
        Format::Json => serde_json::to_string_pretty(&Report { records, summary: &summary })? + "\n",
        Format::Pretty => render_pretty(records, &summary),
    })
}

/// Runs a configuration, writing to `--out` or to `stdout`. Returns the exit status.
pub fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (text, status) = match config.mode {
        Mode::List => (render_list(config.format)?, 0),
        Mode::Verify | Mode::Sweep => {
            let records = evaluate(config)?;
            let status = if SweepSummary::from_records(&records).all_ok() { 0 } else { 1 };
            (render(&records, config.format)?, status)
        }
    };
    match &config.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(status)
}
