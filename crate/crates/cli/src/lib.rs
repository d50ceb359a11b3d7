//! `posgroup` command-line driver.
//!
//! Exit codes: 0 ok, 1 claim or oracle mismatch, 2 bad arguments,
//! 3 budget refusal, 4 I/O failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posgroup_core::groups::Limits;
use posgroup_core::theorems::{verify_symmetric_non_pos, Outcome};
use posgroup_core::{
    group_order, poscheck::resolve_spectrum, spectrum::spectrum_bruteforce_with, spectrum::spectrum_closed_form_with,
    CheckOptions, Error, GroupSpec, PosVerdict,
};
use rayon::prelude::*;

pub mod record;
mod verify;

use record::{csv_table, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_BAD_ARGS: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "posgroup", version, about = "Order spectra and perfect-order-subset checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the order spectrum of one group.
    Spectrum(SpectrumArgs),
    /// Decide whether one group is POS.
    Check(CheckArgs),
    /// Re-check a family claim or counting argument case by case.
    Verify(verify::VerifyArgs),
    /// Emit one verdict row per parameter value.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Symmetric,
    Cyclic,
    Z2power,
    Dihedral,
    Quaternion,
}

#[derive(Debug, Clone, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    /// Maximum number of elements to enumerate.
    #[arg(long, default_value_t = Limits::default().enumeration_budget)]
    budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    group: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Pos,
    NonPos,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    group: FamilyArgs,
    /// Exit 1 unless the verdict matches.
    #[arg(long, value_enum)]
    expect: Option<Expect>,
    /// Also enumerate the group and require both spectra to agree.
    #[arg(long)]
    cross_check: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// First value of the scanned parameter (n, m, or t for z2power).
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Fixed alpha when scanning z2power over t.
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
    format: ScanFormat,
    #[arg(long, default_value_t = Limits::default().enumeration_budget)]
    budget: u64,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn bad_args(message: impl Into<String>) -> Self {
        Failure::new(EXIT_BAD_ARGS, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::PartitionBoundExceeded { .. } => EXIT_BUDGET,
            Error::OracleMismatch(_) | Error::NoPrimeInInterval { .. } => EXIT_MISMATCH,
            Error::InvalidParameter { .. }
            | Error::Domain(_)
            | Error::MalformedElement(_)
            | Error::IncompatibleElements { .. } => EXIT_BAD_ARGS,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_IO, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_ARGS } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(&a, out, err),
        Command::Check(a) => cmd_check(&a, out),
        Command::Verify(a) => verify::cmd_verify(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn limits(budget: u64) -> Limits {
    Limits {
        enumeration_budget: budget,
        ..Limits::default()
    }
}

fn param<T>(value: Option<T>, name: &str, family: Family) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::bad_args(format!("--{name} is required for --family {family:?}").to_lowercase()))
}

fn build_spec(a: &FamilyArgs) -> Result<GroupSpec, Failure> {
    let narrow = |v: u64, name: &str| {
        u32::try_from(v).map_err(|_| Failure::bad_args(format!("--{name} {v} is out of range")))
    };
    let spec = match a.family {
        Family::Symmetric => GroupSpec::symmetric(narrow(param(a.n, "n", a.family)?, "n")?),
        Family::Cyclic => GroupSpec::cyclic(param(a.m, "m", a.family)?),
        Family::Z2power => GroupSpec::z2_power(param(a.alpha, "alpha", a.family)?, param(a.t, "t", a.family)?),
        Family::Dihedral => GroupSpec::dihedral(param(a.n, "n", a.family)?),
        Family::Quaternion => GroupSpec::quaternion(narrow(param(a.n, "n", a.family)?, "n")?),
    };
    Ok(spec?)
}

fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let spec = build_spec(&a.group)?;
    let limits = limits(a.group.budget);
    let spectrum = match a.method {
        Method::Closed => spectrum_closed_form_with(&spec, &limits)?,
        Method::Brute => spectrum_bruteforce_with(&spec, &limits)?,
        Method::Both => {
            let closed = spectrum_closed_form_with(&spec, &limits)?;
            let brute = spectrum_bruteforce_with(&spec, &limits)?;
            if closed != brute {
                writeln!(err, "oracle mismatch for {spec}: closed {closed}, brute {brute}")?;
                return Ok(EXIT_MISMATCH);
            }
            closed
        }
    };
    let order = group_order(&spec)?;
    let verdict = PosVerdict::from_spectrum(&spectrum, &order);
    let rec = OutputRecord::new(&spec, Some(&spectrum), &verdict);
    let text = match a.format {
        Format::Json => rec.to_json(),
        Format::Csv => rec.spectrum_csv(),
        Format::Table => rec.spectrum_table(),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

/// Verdict record for one group. Symmetric groups beyond the partition bound
/// fall back to the counting-argument route.
fn verdict_record(spec: &GroupSpec, options: &CheckOptions) -> Result<OutputRecord, Failure> {
    match resolve_spectrum(spec, options) {
        Ok(spectrum) => {
            let verdict = PosVerdict::from_spectrum(&spectrum, &group_order(spec)?);
            Ok(OutputRecord::new(spec, Some(&spectrum), &verdict))
        }
        Err(Error::BudgetExceeded { .. } | Error::PartitionBoundExceeded { .. })
            if matches!(spec, GroupSpec::Symmetric { n } if *n >= 8) =>
        {
            let GroupSpec::Symmetric { n } = *spec else { unreachable!() };
            let evidence = verify_symmetric_non_pos(n as u64)?;
            let (Some(witness), Some(report)) = (evidence.witness, evidence.report) else {
                return Err(Failure::new(EXIT_MISMATCH, format!("counting argument inconclusive for {spec}")));
            };
            debug_assert_eq!(report.outcome(), Outcome::Confirmed);
            let verdict = PosVerdict {
                is_pos: false,
                violations: vec![witness],
                group_order: group_order(spec)?,
            };
            let mut rec = OutputRecord::new(spec, None, &verdict);
            rec.evidence = Some(report);
            Ok(rec)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    let spec = build_spec(&a.group)?;
    let options = CheckOptions {
        limits: limits(a.group.budget),
        cross_check: a.cross_check,
    };
    let rec = verdict_record(&spec, &options)?;
    let text = match a.format {
        Format::Json => rec.to_json(),
        Format::Csv => rec.verdict_csv(),
        Format::Table => rec.verdict_table(),
    };
    out.write_all(text.as_bytes())?;
    let code = match a.expect {
        Some(Expect::Pos) if !rec.pos => EXIT_MISMATCH,
        Some(Expect::NonPos) if rec.pos => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    Ok(code)
}

fn scan_spec(family: Family, value: u64, alpha: u32) -> Result<GroupSpec, Failure> {
    let narrow = |v: u64| u32::try_from(v).map_err(|_| Failure::bad_args(format!("{v} is out of range")));
    let spec = match family {
        Family::Symmetric => GroupSpec::symmetric(narrow(value)?),
        Family::Cyclic => GroupSpec::cyclic(value),
        Family::Z2power => GroupSpec::z2_power(alpha, narrow(value)?),
        Family::Dihedral => GroupSpec::dihedral(value),
        Family::Quaternion => GroupSpec::quaternion(narrow(value)?),
    };
    Ok(spec?)
}

fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> CmdResult {
    if a.from > a.to {
        return Err(Failure::bad_args(format!("--from {} exceeds --to {}", a.from, a.to)));
    }
    if a.jobs == 0 {
        return Err(Failure::bad_args("--jobs must be at least 1"));
    }
    let specs = (a.from..=a.to)
        .map(|v| scan_spec(a.family, v, a.alpha))
        .collect::<Result<Vec<_>, _>>()?;
    let options = CheckOptions {
        limits: limits(a.budget),
        cross_check: false,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure::new(EXIT_IO, e.to_string()))?;
    // Indexed collect keeps parameter order regardless of scheduling.
    let records = pool.install(|| {
        specs
            .par_iter()
            .map(|spec| verdict_record(spec, &options))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let text = match a.format {
        ScanFormat::Csv => {
            let header = records[0].verdict_csv_header();
            let rows: Vec<_> = records.iter().map(OutputRecord::verdict_csv_row).collect();
            csv_table(&header, &rows)
        }
        ScanFormat::Json => records
            .iter()
            .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
            .collect(),
    };
    match &a.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}
