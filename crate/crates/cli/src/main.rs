//! `sgnorm`: check semigroup norms and the minor norms on square matrices.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on usage,
//! I/O or parse errors.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semigroup_norm::literature::Notation;

#[derive(Debug, Parser)]
#[command(name = "sgnorm", version, about = "Submultiplicative norms on finite semigroups and matrices")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Arithmetic mode; `float` is accepted only by `minor-norm` and `witness`.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a Cayley table is a semigroup.
    Validate(SemigroupArg),
    /// Idempotents, inverses, zeros, Green's classes and the natural order.
    Analyze(SemigroupArg),
    /// Check a norm table against submultiplicativity, the structural laws and the literature axioms.
    NormCheck(NormCheckArgs),
    /// Generate random norms and run every structural check on each.
    Fuzz(FuzzArgs),
    /// ν_k, rank and N_k membership of a square matrix.
    MinorNorm(MinorNormArgs),
    /// The sequence x_m = diag(I_k/m, 0) showing N_k is not closed.
    Witness(WitnessArgs),
}

#[derive(Debug, Args)]
struct SemigroupArg {
    /// Builtin name (z2, c4, s3, t2, t3, leftzero3, null4) or Cayley table file.
    semigroup: String,
}

#[derive(Debug, Args)]
struct NormCheckArgs {
    /// Builtin name or Cayley table file.
    semigroup: String,
    /// Norm family (zero, one, abs, exp, exp_abs) or norm table file.
    norm: String,
    /// How `0` is read by the literature classifier.
    #[arg(long, default_value = "multiplicative")]
    notation: Notation,
}

#[derive(Debug, Args)]
struct FuzzArgs {
    /// Builtin name or Cayley table file.
    semigroup: String,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated value pool, e.g. `0,1/2,1,2`.
    #[arg(long)]
    pool: Option<String>,
}

#[derive(Debug, Args)]
struct MinorNormArgs {
    /// Matrix file: `rows cols` then row-major entries.
    matrix: PathBuf,
    #[arg(long)]
    k: usize,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 10)]
    m_max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(a) => exact_only(cli.mode, "validate").and_then(|_| commands::validate(&a.semigroup)),
        Command::Analyze(a) => exact_only(cli.mode, "analyze").and_then(|_| commands::analyze(&a.semigroup)),
        Command::NormCheck(a) => exact_only(cli.mode, "norm-check")
            .and_then(|_| commands::norm_check(&a.semigroup, &a.norm, a.notation)),
        Command::Fuzz(a) => exact_only(cli.mode, "fuzz")
            .and_then(|_| commands::fuzz(&a.semigroup, a.count, a.seed, a.pool.as_deref())),
        Command::MinorNorm(a) => commands::minor_norm(&a.matrix, a.k, cli.mode),
        Command::Witness(a) => commands::witness(a.n, a.k, a.m_max, cli.mode),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("sgnorm: {e}");
            ExitCode::from(2)
        }
    }
}

fn exact_only(mode: Mode, command: &str) -> Result<(), commands::CliError> {
    match mode {
        Mode::Exact => Ok(()),
        Mode::Float => Err(commands::CliError::Usage(format!(
            "`--mode float` applies only to matrix commands, not `{command}`"
        ))),
    }
}
