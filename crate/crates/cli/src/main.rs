//! `eids` — analyze a matrix presentation of a determinantal singularity.

use clap::{Parser, Subcommand};
use eids_cli::commands::{self, RunConfig};
use eids_cli::render::machine_header;
use eids_core::error::Error;
use eids_core::limits::DEFAULT_MAX_WORK;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eids",
    version,
    about = "Exact invariants and Euler obstructions of determinantal singularity germs"
)]
struct Cli {
    /// Genericity seed for linear forms and deformation constants.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Abort standard-basis runs past this total degree.
    #[arg(long, global = true, default_value_t = 60)]
    max_degree: u32,
    /// Abort standard-basis runs past this many basis elements.
    #[arg(long, global = true, default_value_t = 5000)]
    max_basis: usize,
    /// Deterministic work budget per top-level computation.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WORK)]
    max_work: u64,
    /// Line-oriented machine-readable output.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the determinantal type and report the rank stratification.
    Check { file: PathBuf },
    /// Compute the invariants the presentation supports.
    Invariants { file: PathBuf },
    /// Compute the local Euler obstruction at the origin.
    Eu { file: PathBuf },
    /// Run the bundled example tables and compare published obstructions.
    CorpusRun {
        /// Only run rows whose id or label contains this substring.
        #[arg(long)]
        only: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        max_degree: cli.max_degree,
        max_basis: cli.max_basis,
        max_work: cli.max_work,
        machine: cli.machine,
    };
    let (command, file) = match &cli.command {
        Command::Check { file } => ("check", Some(file.clone())),
        Command::Invariants { file } => ("invariants", Some(file.clone())),
        Command::Eu { file } => ("eu", Some(file.clone())),
        Command::CorpusRun { .. } => ("corpus-run", None),
    };
    let label = file.as_ref().map(|f| f.display().to_string());

    let text = match &file {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => Some(t),
            Err(e) => {
                let message = format!("cannot read {}: {e}", path.display());
                return fail_custom(&cfg, command, label.as_deref(), &message, 4);
            }
        },
        None => None,
    };

    let result = match &cli.command {
        Command::Check { .. } => {
            commands::run_check(text.as_deref().unwrap(), label.as_deref().unwrap(), &cfg)
        }
        Command::Invariants { .. } => {
            commands::run_invariants(text.as_deref().unwrap(), label.as_deref().unwrap(), &cfg)
        }
        Command::Eu { .. } => {
            commands::run_eu(text.as_deref().unwrap(), label.as_deref().unwrap(), &cfg)
        }
        Command::CorpusRun { only } => Ok(commands::run_corpus(only.as_deref(), &cfg)),
    };

    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            exit_with(out.exit)
        }
        Err(e) => fail(&cfg, command, label.as_deref(), &e),
    }
}

fn fail(cfg: &RunConfig, command: &str, file: Option<&str>, e: &Error) -> ExitCode {
    fail_custom(cfg, command, file, &e.to_string(), commands::exit_code(e))
}

fn fail_custom(
    cfg: &RunConfig,
    command: &str,
    file: Option<&str>,
    message: &str,
    code: i32,
) -> ExitCode {
    if cfg.machine {
        let mut lines = machine_header(command, file, cfg.seed);
        lines.push("status: error".to_string());
        lines.push(format!("error: {message}"));
        println!("{}", lines.join("\n"));
    } else {
        eprintln!("error: {message}");
    }
    exit_with(code)
}

fn exit_with(code: i32) -> ExitCode {
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
