//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linarr::cli::{self, Format, Report};
use linarr::error::Error;

#[derive(Parser)]
#[command(
    name = "linarr",
    version,
    about = "Exact analysis of rational line arrangements: intersection combinatorics, \
             Jacobian syzygies, freeness classification, and boundedness certificates"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnvelopeMode {
    Free,
    Pog,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection combinatorics and the classical inequality checks.
    Analyze {
        /// Arrangement file: {"lines": [["a","b","c"], ...]}.
        path: PathBuf,
    },
    /// Syzygy analysis and freeness / plus-one-generated classification.
    Classify {
        path: PathBuf,
        /// Generator search cap (default 2d).
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Point-count bounds for k-fold intersection points.
    Bounds {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Feasibility certificates over a range of line counts.
    Envelope {
        #[arg(long)]
        d_min: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long, value_enum)]
        mode: EnvelopeMode,
        /// Witness limit per line count.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Recompute both headline bounds with exact boundary traces.
    Reproduce,
    /// Generate seeded random arrangements and verify every invariant.
    Random {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        coeff_bound: i64,
        #[arg(long)]
        r_max: Option<usize>,
    },
}

/// Exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 internal
/// consistency violation.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidCoefficient { .. }
        | Error::ZeroLine { .. }
        | Error::DuplicateLine { .. }
        | Error::Io(_) => 2,
        Error::Precondition(_)
        | Error::InvalidRange { .. }
        | Error::CannotGenerate { .. }
        | Error::CapExceeded { .. }
        | Error::IndexOutOfRange { .. }
        | Error::Truncated { .. } => 3,
        Error::IdenticalLines
        | Error::DimensionMismatch { .. }
        | Error::NonStabilized { .. }
        | Error::Inconsistent(_) => 4,
    }
}

fn run(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Analyze { path } => cli::cmd_analyze(path),
        Command::Classify { path, r_max } => cli::cmd_classify(path, *r_max),
        Command::Bounds { d, k } => cli::cmd_bounds(*d, *k),
        Command::Envelope {
            d_min,
            d_max,
            mode,
            limit,
        } => {
            let mode = match mode {
                EnvelopeMode::Free => "free",
                EnvelopeMode::Pog => "pog",
            };
            cli::cmd_envelope(*d_min, *d_max, mode, *limit)
        }
        Command::Reproduce => Ok(cli::cmd_reproduce()),
        Command::Random {
            d,
            seed,
            count,
            coeff_bound,
            r_max,
        } => cli::cmd_random(*d, *seed, *count, *coeff_bound, *r_max),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let report = match run(&args.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Truncated { .. } = e {
                eprintln!("hint: raise --r-max and rerun");
            }
            return ExitCode::from(exit_code_for(&e));
        }
    };

    let format = match args.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    let rendered = cli::render(&report, format);
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }

    if report.has_failed_checks() {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
