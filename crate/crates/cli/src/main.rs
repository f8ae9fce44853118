//! `hochschild`: batch front end for checking monoid objects and computing
//! their Hochschild cohomology from JSON instance files.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or shape error, 3 axiom failure,
//! 4 resource ceiling, 5 internal invariant breach.

mod commands;
mod instance;
mod report;
mod selftest;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hochschild_core::hochschild::DEFAULT_RANK_CEILING;
use hochschild_core::ring::RingKind;
use hochschild_core::{Integer, Rational, Scalar, Zmod};

use commands::{Options, Outcome};
use report::{CommandEcho, InstanceSummary, Report};

/// Overrides the largest admissible rank of a cochain module.
const CEILING_ENV: &str = "HOCHSCHILD_RANK_CEILING";

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const AXIOM: i32 = 3;
    pub const CEILING: i32 = 4;
    pub const INTERNAL: i32 = 5;

    fn with(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code: code as u8,
            message: message.into(),
        }
    }
    pub fn usage(m: impl Into<String>) -> Self {
        Self::with(Self::USAGE, m)
    }
    pub fn parse(m: impl Into<String>) -> Self {
        Self::with(Self::PARSE, m)
    }
    pub fn axiom(m: impl Into<String>) -> Self {
        Self::with(Self::AXIOM, m)
    }
    pub fn ceiling(m: impl Into<String>) -> Self {
        Self::with(Self::CEILING, m)
    }
    pub fn internal(m: impl Into<String>) -> Self {
        Self::with(Self::INTERNAL, m)
    }
}

#[derive(Parser)]
#[command(name = "hochschild", version, about = "Exact Hochschild cohomology of monoid objects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monoid, bimodule and coherence axioms.
    Check(InstanceArgs),
    /// Cochain ranks and differential matrices.
    Complex(InstanceArgs),
    /// HH^k for k below --max-degree.
    Cohomology(InstanceArgs),
    /// Built differentials against alternating coface sums.
    Compare(InstanceArgs),
    /// Simplex identities, Smith form properties and the unit monoid pipeline.
    Selftest(CommonArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// JSON instance file.
    instance: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Clone)]
struct CommonArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for randomized sampling.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn rank_ceiling() -> Result<usize, Failure> {
    match std::env::var(CEILING_ENV) {
        Err(_) => Ok(DEFAULT_RANK_CEILING),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{CEILING_ENV}: not a rank: {v:?}"))),
    }
}

fn emit(report: &Report, args: &CommonArgs) -> Result<(), Failure> {
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::internal(e.to_string())),
    }
}

fn run_instance<T: Scalar>(
    name: &'static str,
    src: &instance::Source,
    opts: &Options,
    report: Report,
) -> Result<Outcome, Failure> {
    let loaded = instance::build::<T>(src)?;
    match name {
        "check" => commands::check(&loaded, opts, report),
        "complex" => commands::complex(&loaded, opts, report),
        "cohomology" => commands::cohomology(src, &loaded, opts, report),
        "compare" => commands::compare(&loaded, opts, report),
        other => Err(Failure::internal(format!("unknown command {other}"))),
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let start = Instant::now();
    let (name, path, args) = match cli.command {
        Command::Check(a) => ("check", Some(a.instance), a.common),
        Command::Complex(a) => ("complex", Some(a.instance), a.common),
        Command::Cohomology(a) => ("cohomology", Some(a.instance), a.common),
        Command::Compare(a) => ("compare", Some(a.instance), a.common),
        Command::Selftest(a) => ("selftest", None, a),
    };
    let opts = Options {
        max_degree: usize::try_from(args.max_degree).map_err(|_| Failure::usage("--max-degree too large"))?,
        seed: args.seed,
        rank_ceiling: rank_ceiling()?,
    };
    let echo = CommandEcho {
        name,
        instance: path.as_ref().map(|p| p.display().to_string()),
        max_degree: opts.max_degree,
        seed: opts.seed,
    };

    let Outcome { mut report, code } = match path {
        None => {
            let mut report = Report::new(echo, None);
            let seed = opts.seed.unwrap_or(0);
            report.checks.push(selftest::simplex(seed));
            report.checks.push(selftest::snf(seed));
            report.checks.push(selftest::unit_monoid_end_to_end(opts.max_degree));
            let code = if report.all_checks_pass() { 0 } else { Failure::INTERNAL };
            Outcome { report, code }
        }
        Some(path) => {
            let src = instance::read(&path)?;
            let summary = InstanceSummary {
                digest: src.digest.clone(),
                ring: src.ring.to_string(),
                category: src.category_name(),
                monoid_dim: src.file.monoid.dim,
                bimodule: match &src.file.bimodule {
                    None => "regular".into(),
                    Some(b) => format!("dim {}", b.dim),
                },
            };
            let report = Report::new(echo, Some(summary));
            match src.ring.kind() {
                RingKind::Integers => run_instance::<Integer>(name, &src, &opts, report)?,
                RingKind::Rationals => run_instance::<Rational>(name, &src, &opts, report)?,
                RingKind::Modular => run_instance::<Zmod>(name, &src, &opts, report)?,
            }
        }
    };
    report.finish(start.elapsed().as_millis());
    emit(&report, &args)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Failure::USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
