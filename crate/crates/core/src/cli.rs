//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 invalid input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::degree::{self, expected_degree, DegreeResult, DEFAULT_MAX_N};
use crate::error::Error;
use crate::geometry::Catalog;
use crate::oracle::{self, DEFAULT_SEED};
use crate::selfcheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "logdeg",
    version,
    about = "Degrees of the logarithmic component L(1,1,1) on P^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree for a single n.
    Degree {
        #[arg(long)]
        n: u32,
        /// Print every catalog class before the result.
        #[arg(long)]
        dump_classes: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// One row per n in a range.
    Table {
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 8)]
        to: u32,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Consistency checks on the catalog, pushforwards and conventions.
    Selfcheck {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Randomized property suites for the log-form oracle.
    Oracle {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Wall-clock timings of the degree pipeline.
    Bench {
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 8)]
        to: u32,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Size of the worker pool.
    #[arg(long, default_value_t = default_workers(), value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Largest n accepted.
    #[arg(long, env = "LOGDEG_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Compare against the published degrees for n = 3..=8.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn default_workers() -> u32 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u32)
}

#[derive(Serialize)]
struct Row {
    n: u32,
    degree: String,
    pre_division_total: String,
    term_count: u64,
    elapsed_ms: u64,
}

impl From<&DegreeResult> for Row {
    fn from(r: &DegreeResult) -> Self {
        Row {
            n: r.n,
            degree: r.degree.to_string(),
            pre_division_total: r.pre_division_total.to_string(),
            term_count: r.term_count,
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    execute(&cli.command, out, err)
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Degree { common, .. }
        | Command::Table { common, .. }
        | Command::Selfcheck { common, .. }
        | Command::Oracle { common, .. }
        | Command::Bench { common, .. } => common,
    }
}

/// Runs an already parsed command inside a pool of `--workers` threads.
pub fn execute(
    command: &Command,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(common(command).workers as usize)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| dispatch(command, out, err));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Integrality(_) | Error::StageConsistency { .. } => EXIT_VERIFY,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn dispatch(
    command: &Command,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, Error> {
    match command {
        Command::Degree {
            n,
            dump_classes,
            common,
            output,
        } => {
            degree::validate_range(*n, *n, common.max_n)?;
            if *dump_classes {
                let cat = Catalog::new(*n)?;
                let sink: &mut (dyn Write + Send) = if output.format == Format::Text {
                    &mut *out
                } else {
                    &mut *err
                };
                for (name, value) in cat.dump() {
                    writeln!(sink, "{name} = {value}").map_err(io)?;
                }
            }
            let row = degree::degree_l111(*n)?;
            emit(&[row], output, false, out, err)
        }
        Command::Table {
            from,
            to,
            common,
            output,
        } => {
            let rows = degree::table(*from, *to, common.max_n)?;
            emit(&rows, output, true, out, err)
        }
        Command::Bench {
            from,
            to,
            common,
            output,
        } => {
            let rows = degree::table(*from, *to, common.max_n)?;
            let total: u128 = rows.iter().map(|r| r.elapsed.as_millis()).sum();
            let code = if output.format == Format::Text {
                for r in &rows {
                    let ms = r.elapsed.as_millis();
                    writeln!(out, "{:>3}  {ms:>8} ms  {:>9} terms", r.n, r.term_count)
                        .map_err(io)?;
                }
                emit(
                    &rows,
                    &Output {
                        format: Format::Text,
                        check: output.check,
                    },
                    true,
                    &mut std::io::sink(),
                    err,
                )?
            } else {
                emit(&rows, output, true, out, err)?
            };
            writeln!(err, "total {total} ms over {} rows", rows.len()).map_err(io)?;
            Ok(code)
        }
        Command::Selfcheck { n, common, .. } => {
            degree::validate_range(*n, *n, common.max_n)?;
            let reports = selfcheck::run(*n)?;
            for r in &reports {
                writeln!(out, "{r}").map_err(io)?;
            }
            Ok(if reports.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
        Command::Oracle { seed, .. } => {
            let reports = oracle::run_all(*seed)?;
            for r in &reports {
                writeln!(out, "{r}").map_err(io)?;
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("output error: {e}"))
}

fn emit(
    rows: &[DegreeResult],
    output: &Output,
    tabular: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, Error> {
    match output.format {
        Format::Text => {
            for r in rows {
                let mark = if r.is_verified_range() {
                    ""
                } else {
                    " (unverified)"
                };
                if tabular {
                    writeln!(out, "{:>3}  {}{mark}", r.n, r.degree).map_err(io)?;
                } else {
                    writeln!(out, "{}{mark}", r.degree).map_err(io)?;
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(Row::from(r))
                    .map_err(|e| Error::Precondition(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            out.write_all(&bytes).map_err(io)?;
            note_unverified(rows, err)?;
        }
        Format::Json => {
            for r in rows {
                let line = serde_json::to_string(&Row::from(r))
                    .map_err(|e| Error::Precondition(e.to_string()))?;
                writeln!(out, "{line}").map_err(io)?;
            }
            note_unverified(rows, err)?;
        }
    }
    if output.check {
        let mut ok = true;
        for r in rows {
            match expected_degree(r.n) {
                Some(d) if r.matches_known() == Some(false) => {
                    writeln!(
                        err,
                        "check failed: n = {} expected {d}, got {}",
                        r.n, r.degree
                    )
                    .map_err(io)?;
                    ok = false;
                }
                Some(_) => {}
                None => writeln!(err, "check skipped: no published value for n = {}", r.n)
                    .map_err(io)?,
            }
        }
        if !ok {
            return Ok(EXIT_VERIFY);
        }
    }
    Ok(EXIT_OK)
}

fn note_unverified(rows: &[DegreeResult], err: &mut (dyn Write + Send)) -> Result<(), Error> {
    for r in rows.iter().filter(|r| !r.is_verified_range()) {
        writeln!(err, "note: n = {} is unverified (no published value)", r.n).map_err(io)?;
    }
    Ok(())
}
