//! `nsring`: analyze numerical semigroups, enumerate them by genus, and
//! batch-verify the Teter and canonical-trace results.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use nsring_core::{
    classify, enumerate_by_genus, predicted_vs_actual, sweep, ClassificationReport, Error,
    FamilySpec, NumericalSemigroup, ReportDocument, Suite, SweepOptions,
};

mod table;

const EXIT_VIOLATION: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nsring",
    version,
    about = "Numerical semigroup rings: invariants, canonical trace, Teter property"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the semigroup generated by the given integers.
    Analyze {
        /// Generators, comma- or space-separated.
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
        /// Emit the JSON report instead of a table.
        #[arg(long)]
        json: bool,
        /// Include the classification time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// List every semigroup up to a genus bound.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// One JSON report per line.
        #[arg(long)]
        ndjson: bool,
    },
    /// Check every implication of the chosen suite over all semigroups up to a genus bound.
    Verify {
        #[arg(long)]
        genus: usize,
        /// Scan every shift in [1, 2(F + a_n)] and test the lower bound on shifts.
        #[arg(long)]
        paranoid: bool,
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Emit the whole sweep report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare a parametric family's predicted classification with the computed one.
    Family {
        #[arg(value_enum)]
        variant: Variant,
        /// `a s d n` for arith, `a b c` for pseudosym.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        params: Vec<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Teter,
    NearlyGorenstein,
    AlmostSymmetric,
    PseudoSymmetric,
    MinMultiplicity,
}

impl Filter {
    fn keep(self, r: &ClassificationReport) -> bool {
        match self {
            Filter::All => true,
            Filter::Teter => r.teter,
            Filter::NearlyGorenstein => r.nearly_gorenstein,
            Filter::AlmostSymmetric => r.almost_symmetric,
            Filter::PseudoSymmetric => r.pseudo_symmetric,
            Filter::MinMultiplicity => r.min_multiplicity,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Arith,
    Pseudosym,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Analyze { gens, json, timing } => analyze(&gens, json, timing),
        Command::Enumerate {
            genus,
            filter,
            ndjson,
        } => enumerate(genus, filter, ndjson),
        Command::Verify {
            genus,
            paranoid,
            suite,
            json,
        } => verify(genus, paranoid, suite, json),
        Command::Family { variant, params } => family(variant, &params),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_BAD_INPUT,
            })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

enum CliError {
    Core(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn configure_threads() {
    let Ok(raw) = std::env::var("NSRING_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // Only fails if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => eprintln!("warning: ignoring NSRING_THREADS={raw:?}"),
    }
}

fn parse_generators(args: &[String]) -> Result<Vec<i64>, CliError> {
    let tokens: Vec<&str> = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    tokens
        .iter()
        .map(|t| match t.parse::<i64>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(CliError::Usage(format!("`{t}` is not a positive integer"))),
        })
        .collect()
}

fn analyze(args: &[String], json: bool, timing: bool) -> Result<ExitCode, CliError> {
    let input = parse_generators(args)?;
    let start = Instant::now();
    let h = NumericalSemigroup::from_generators(&input)?;
    let mut doc = ReportDocument::new(input, classify(&h));
    if timing {
        doc.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
    } else {
        table::write_report(&mut out, &doc)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(genus: usize, filter: Filter, ndjson: bool) -> Result<ExitCode, CliError> {
    let all: Vec<NumericalSemigroup> = enumerate_by_genus(genus)?.collect();
    let mut reports: Vec<ClassificationReport> = all
        .par_iter()
        .map(classify)
        .filter(|r| filter.keep(r))
        .collect();
    reports.sort_by(|a, b| (a.genus, &a.generators).cmp(&(b.genus, &b.generators)));

    let mut out = BufWriter::new(io::stdout().lock());
    for r in reports {
        if ndjson {
            let doc = ReportDocument::new(r.generators.clone(), r);
            serde_json::to_writer(&mut out, &doc)?;
            out.write_all(b"\n")?;
        } else {
            table::write_line(&mut out, &r)?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(genus: usize, paranoid: bool, suite: Suite, json: bool) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let report = sweep(&SweepOptions {
        g_max: genus,
        suite,
        paranoid,
    })?;
    let elapsed = start.elapsed();

    let mut out = BufWriter::new(io::stdout().lock());
    if json {
        serde_json::to_writer_pretty(&mut out, &report)?;
        writeln!(out)?;
    } else {
        table::write_sweep(&mut out, &report)?;
        for v in &report.violations {
            writeln!(out, "VIOLATION {}: {}", v.check, v.detail)?;
            let doc = ReportDocument::new(v.report.generators.clone(), v.report.clone());
            serde_json::to_writer(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    eprintln!("swept {} semigroups in {:.2?}", report.semigroups, elapsed);
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn family(variant: Variant, params: &[i64]) -> Result<ExitCode, CliError> {
    let spec = match (variant, params) {
        (Variant::Arith, &[a, s, d, n]) => FamilySpec::GeneralizedArithmetic { a, s, d, n },
        (Variant::Pseudosym, &[a, b, c]) => FamilySpec::PseudoSymmetric3Gen { a, b, c },
        (Variant::Arith, _) => return Err(CliError::Usage("arith takes exactly `a s d n`".into())),
        (Variant::Pseudosym, _) => {
            return Err(CliError::Usage("pseudosym takes exactly `a b c`".into()))
        }
    };
    let cmp = predicted_vs_actual(spec)?;
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &cmp)?;
    writeln!(out)?;
    Ok(if cmp.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}
