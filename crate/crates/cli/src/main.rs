//! `bchqds`: build, count, verify and simulate quantum data-syndrome codes.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 verification failure,
//! 3 enumeration budget exceeded.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bchqds", version, about = "Quantum data-syndrome codes with BCH syndrome measurement codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// BCH code construction.
    #[command(subcommand)]
    Bch(BchCommand),
    /// QDS assembly and overhead counting.
    #[command(subcommand)]
    Qds(QdsCommand),
    /// Exhaustively check the simultaneous correction guarantee.
    Verify(VerifyArgs),
    /// Weight-stratified Monte Carlo.
    #[command(subcommand)]
    Sim(SimCommand),
}

#[derive(Subcommand, Debug)]
enum BchCommand {
    /// Print `[n,k,d]`, `R(m,t)` and the generator polynomial.
    Info(BchInfoArgs),
}

#[derive(Args, Debug)]
struct BchInfoArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    t: usize,
    /// Remove the first A coordinates.
    #[arg(long, default_value_t = 0)]
    shorten: usize,
    /// Write the generator matrix in the matrix text format.
    #[arg(long, value_name = "FILE")]
    generator_matrix: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum QdsCommand {
    /// Build H_Q for a stabilizer code and SM code.
    Assemble(AssembleArgs),
    /// Extra-measurement table: BCH vs Fujiwara vs repetition.
    Count(CountArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    /// Built-in stabilizer code.
    #[arg(long, value_enum, conflicts_with = "code_file", required_unless_present = "code_file")]
    code: Option<BuiltinCode>,
    /// Stabilizer code in text format: `n k`, then one Pauli string per generator.
    #[arg(long, value_name = "FILE")]
    code_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    sm: SmKind,
    /// Correctable syndrome flips; not accepted with `identity`.
    #[arg(long)]
    t: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinCode {
    Steane,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmKind {
    Bch,
    Repetition,
    Identity,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct AssembleArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// H_Q destination (stdout if absent).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Parameter JSON destination; defaults to `<out>.json`, or stderr.
    #[arg(long, value_name = "FILE")]
    meta: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Inclusive range `lo:hi` or a comma list.
    #[arg(long, default_value = "5:60")]
    ell_range: String,
    #[arg(long, default_value = "1:12")]
    t_range: String,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Maximum number of (data error, flip pattern) cases to enumerate.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u128,
}

#[derive(Subcommand, Debug)]
enum SimCommand {
    /// Estimate p_L(w_q, w_s) for every weight cell.
    Grid(GridArgs),
    /// Recombine a grid into p_err over a range of p_s.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct GridArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Trials per boundary cell (w_q <= t_q + 1 and w_s <= t_s + 1).
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Trials per remaining cell; capped at --trials.
    #[arg(long, default_value_t = 1_000)]
    trials_far: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_wq: Option<usize>,
    #[arg(long)]
    max_ws: Option<usize>,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_name = "FILE")]
    grid: PathBuf,
    /// `lo:hi:logN`, `lo:hi:linN`, or a comma list of p_s values.
    #[arg(long, default_value = "1e-4:1e-1:log25")]
    ps: String,
    /// p_q = ratio * p_s.
    #[arg(long, default_value_t = 0.01)]
    ratio: f64,
    #[arg(long, default_value_t = 1e-12)]
    truncation: f64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Bch(BchCommand::Info(a)) => {
            commands::bch_info(a.m, a.t, a.shorten, a.generator_matrix.as_deref(), a.format)
        }
        Command::Qds(QdsCommand::Assemble(a)) => commands::assemble(&a.code, a.out.as_deref(), a.meta.as_deref()),
        Command::Qds(QdsCommand::Count(a)) => commands::count(&a.ell_range, &a.t_range, a.out.as_deref(), a.format),
        Command::Verify(a) => commands::verify(&a.code, a.budget),
        Command::Sim(SimCommand::Grid(a)) => commands::sim_grid(&commands::GridRequest {
            code: a.code,
            trials: a.trials,
            trials_far: a.trials_far,
            seed: a.seed,
            max_wq: a.max_wq,
            max_ws: a.max_ws,
            out: a.out,
        }),
        Command::Sim(SimCommand::Sweep(a)) => {
            commands::sim_sweep(&a.grid, &a.ps, a.ratio, a.truncation, a.out.as_deref(), a.format)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
