use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use comatrix_cli::commands::{run_build, run_check, run_descent, run_galois, BuildTarget};
use comatrix_cli::{parse_workspace, ExitStatus, Outcome, Selector};

/// Exact checks for corings, comatrix corings and Galois comodules.
#[derive(Parser)]
#[command(name = "comatrix", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// Subgroup of the grading group, by element names.
    #[arg(long, value_delimiter = ',', conflicts_with = "family")]
    subgroup: Option<Vec<String>>,
    /// Comodule names, e.g. "[e]A,[s]A".
    #[arg(long, value_delimiter = ',')]
    family: Option<Vec<String>>,
}

impl FamilyArgs {
    fn selector(&self) -> Selector {
        match (&self.subgroup, &self.family) {
            (Some(h), _) => Selector::Subgroup(h.clone()),
            (None, Some(f)) => Selector::Family(f.clone()),
            (None, None) => Selector::Document,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Base,
    Coproduct,
    Quotient,
    Infinite,
    Endo,
    Grouplike,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the algebra, coring, grouplikes and comodules.
    Check { file: PathBuf },
    /// Decide whether a family is Galois.
    Galois {
        file: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Evaluate the descent conditions for a family.
    Descent {
        file: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
        /// Comodules to test for generation; defaults to the document's probes.
        #[arg(long, value_delimiter = ',')]
        probes: Option<Vec<String>>,
    },
    /// Emit a constructed coring as an explicit workspace document.
    Build {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "base")]
        target: Target,
        #[command(flatten)]
        family: FamilyArgs,
    },
}

fn run(cli: Cli) -> Outcome {
    let file = match &cli.command {
        Command::Check { file }
        | Command::Galois { file, .. }
        | Command::Descent { file, .. }
        | Command::Build { file, .. } => file,
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                status: ExitStatus::InputError,
                stdout: String::new(),
                stderr: format!("cannot read {}: {e}\n", file.display()),
            }
        }
    };
    let ws = match parse_workspace(&text) {
        Ok(ws) => ws,
        Err(e) => return Outcome::input_error(&e),
    };
    match &cli.command {
        Command::Check { .. } => run_check(&ws, cli.json),
        Command::Galois { family, .. } => run_galois(&ws, &family.selector(), cli.json),
        Command::Descent { family, probes, .. } => run_descent(&ws, &family.selector(), probes.as_deref(), cli.json),
        Command::Build { target, family, .. } => {
            let target = match target {
                Target::Base => BuildTarget::Base,
                Target::Coproduct => BuildTarget::Coproduct,
                Target::Quotient => BuildTarget::Quotient,
                Target::Infinite => BuildTarget::Infinite,
                Target::Endo => BuildTarget::Endo,
                Target::Grouplike => BuildTarget::Grouplike,
            };
            run_build(&ws, target, &family.selector())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::InputError.code() as u8
            } else {
                0
            });
        }
    };
    let outcome = run(cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status.code() as u8)
}
