use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inideal_cli::commands::EXIT_INPUT;
use inideal_cli::{run, verify, Command, Flags, Outcome};

/// Initial ideals and initial algebras over the rationals.
#[derive(Parser)]
#[command(name = "inideal", version, about)]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Reduced Groebner basis.
    Gb(Job),
    /// Initial ideal (for the order or `--weight`) or initial algebra.
    Ini(Job),
    /// Sagbi test, or completion up to `--cap`.
    Sagbi(Job),
    /// Weight vector for comparisons, an ideal or a Sagbi basis.
    Weight(Job),
    /// Homogenized family with `--fiber` and `--freeness-bound`.
    Family(Job),
    /// Hilbert series and function up to `--dmax`.
    Hilbert(Job),
    /// Krull dimension.
    Dim(Job),
    /// Graded Betti table up to `--jmax`.
    Betti(Job),
    /// Run a built-in verification scenario (`all` runs every one).
    Verify { scenario: String },
}

#[derive(clap::Args)]
struct Job {
    /// Problem file; `-` reads standard input.
    file: PathBuf,
    #[command(flatten)]
    flags: Flags,
}

/// Environment variable bounding the reduction steps of one Groebner run.
const STEP_LIMIT_VAR: &str = "INIDEAL_STEP_LIMIT";

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(STEP_LIMIT_VAR) {
        match v.trim().parse::<usize>() {
            Ok(n) => inideal::groebner::set_step_limit(Some(n)),
            Err(_) => {
                eprintln!("error: {STEP_LIMIT_VAR} must be a nonnegative integer");
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
    }
    let (command, job) = match cli.action {
        Action::Verify { scenario } => return finish(verify(&scenario)),
        Action::Gb(j) => (Command::Gb, j),
        Action::Ini(j) => (Command::Ini, j),
        Action::Sagbi(j) => (Command::Sagbi, j),
        Action::Weight(j) => (Command::Weight, j),
        Action::Family(j) => (Command::Family, j),
        Action::Hilbert(j) => (Command::Hilbert, j),
        Action::Dim(j) => (Command::Dim, j),
        Action::Betti(j) => (Command::Betti, j),
    };
    let text = match read_input(&job.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", job.file.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    finish(run(command, &text, &job.flags))
}

fn finish(outcome: Outcome) -> ExitCode {
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
