mod config;
mod jobs;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use jobs::{CliError, Job};

#[derive(Parser, Debug)]
#[command(name = "skeinlab", version, about = "Exact colored HOMFLYPT invariants of torus links")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Opts,
}

/// Flags shared by every subcommand. Each one can also come from `--config`.
#[derive(Args, Debug, Default, Clone)]
pub struct Opts {
    /// Torus link T_{mL}^{nL} given as `m n L`
    #[arg(long, global = true, num_args = 3, value_names = ["M", "N", "L"], allow_negative_numbers = true)]
    pub torus: Option<Vec<i64>>,

    /// `torus` (default), `unknot`, or `t2` for the congruent skein family
    #[arg(long, global = true)]
    pub family: Option<String>,

    /// One `[λ, μ]` per component as JSON, e.g. '[[[2],[1]]]'
    #[arg(long, global = true)]
    pub pairs: Option<String>,

    /// One partition per component as JSON, e.g. '[[2],[1,1]]'
    #[arg(long, global = true)]
    pub labels: Option<String>,

    /// Extra kinks per component, comma separated
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub framing: Option<String>,

    /// Components (0-based, comma separated) with reversed orientation
    #[arg(long, global = true)]
    pub reversed: Option<String>,

    #[arg(long, global = true)]
    pub p: Option<usize>,

    /// A single k or an inclusive range `a..b`
    #[arg(long, global = true)]
    pub k: Option<String>,

    /// Degree bound per component for the free energy
    #[arg(long = "D", global = true)]
    pub degree: Option<usize>,

    /// Fixed ħ truncation order for `special` (default: grow until enough)
    #[arg(long = "K", global = true)]
    pub order: Option<usize>,

    /// Worker threads for independent jobs
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the JSON report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// `key = value` job file; command-line flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Framing-independent W for the given pairs
    Invariant,
    /// Framed bracket for the given pairs
    Bracket,
    /// Composite invariant H for the given labels
    Composite {
        /// Use the framed bracket without writhe normalization
        #[arg(long)]
        framed: bool,
    },
    /// Reformulated invariant: Ž for --labels, Ř for --p
    Reform,
    /// LMOV integrality table for label --labels up to degree --D
    Lmov,
    /// Congruent skein relation (--family t2) or the Frobenius congruence
    Congruence,
    /// Special polynomial lim_{q→1} W / Π s#
    Special,
    /// Run the exact property suites
    Selftest {
        /// Only the structural suites
        #[arg(long)]
        quick: bool,
    },
    /// Recompute a printed fixture and diff it
    Repro { fixture: Fixture },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Fixture {
    #[value(name = "example-3.1")]
    Example31,
    #[value(name = "example-4.3")]
    Example43,
    #[value(name = "example-6.3")]
    Example63,
    #[value(name = "theorem-7.9")]
    Theorem79,
}

fn emit(report: &Value, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(report)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(Value, bool), CliError> {
    let job = Job::resolve(cli.opts)?;
    job.configure_threads()?;
    let result = match cli.command {
        Command::Invariant => job.invariant(),
        Command::Bracket => job.bracket(),
        Command::Composite { framed } => job.composite(framed),
        Command::Reform => job.reform(),
        Command::Lmov => job.lmov(),
        Command::Congruence => job.congruence(),
        Command::Special => job.special(),
        Command::Selftest { quick } => job.selftest(quick),
        Command::Repro { fixture } => repro::run(&job, fixture),
    }?;
    emit(&result.0, job.out.as_ref()).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(result)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((_, true)) => ExitCode::SUCCESS,
        Ok((_, false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("skeinlab: {e}");
            ExitCode::from(e.code())
        }
    }
}
