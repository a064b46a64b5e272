//! Batch front end: problem files, commands with canonical text reports, and
//! the built-in verification scenarios.

pub mod commands;
pub mod problem;
pub mod random;
pub mod scenarios;

pub use commands::{run, Command, Flags, Outcome};
pub use problem::{InputError, Problem};

/// Runs a named scenario, or all of them for `all`.
pub fn verify(name: &str) -> Outcome {
    let names: Vec<&str> = if name == "all" { scenarios::scenario_names() } else { vec![name] };
    let mut stdout = String::new();
    let mut all_passed = true;
    for n in names {
        match scenarios::run_scenario(n) {
            Some(report) => {
                all_passed &= report.passed();
                stdout.push_str(&report.to_text());
            }
            None => {
                return Outcome {
                    stdout: String::new(),
                    stderr: format!(
                        "error: unknown scenario `{n}`; available: all, {}\n",
                        scenarios::scenario_names().join(", ")
                    ),
                    code: commands::EXIT_INPUT,
                }
            }
        }
    }
    let code = if all_passed { commands::EXIT_OK } else { commands::EXIT_INFEASIBLE };
    Outcome { stdout, stderr: String::new(), code }
}
