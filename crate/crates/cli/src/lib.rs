//! Model-file language and command-line front end for `gradedq`.

pub mod commands;
pub mod dsl;
pub mod error;
pub mod report;

use clap::Parser;

pub use commands::{Cli, Command, Output};
pub use error::CliError;
pub use report::{Check, Object, Report};

/// What a run printed and the process exit code: 0 all checks pass, 1 some
/// check fails, 2 usage, parse or construction error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn command_line(args: &[String]) -> String {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--json" || a.starts_with("--model=") {
            continue;
        }
        if a == "--model" || a == "-m" {
            skip = true;
            continue;
        }
        out.push(a.as_str());
    }
    out.join(" ")
}

fn failure(e: CliError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: 2,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_cli<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let options = match dsl::ParseOptions::from_env() {
        Ok(o) => o,
        Err(e) => return failure(CliError::Usage(e)),
    };
    let (model, model_name) = match &cli.model {
        None => (dsl::ModelFile::default(), "-".to_string()),
        Some(path) => {
            let name = path.display().to_string();
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(source) => return failure(CliError::Io { path: name, source }),
            };
            let options = dsl::ParseOptions {
                base_dir: path.parent().map(|p| p.to_path_buf()),
                ..options
            };
            match dsl::parse_model_with(&text, &options) {
                Ok(m) => (m, name),
                Err(source) => return failure(CliError::Parse { path: name, source }),
            }
        }
    };
    match commands::run(&cli.command, &model, &model_name, &command_line(&args)) {
        Err(e) => failure(e),
        Ok(Output::Text(t)) => Outcome {
            stdout: t,
            stderr: String::new(),
            code: 0,
        },
        Ok(Output::Report(r)) => {
            let stdout = if cli.json { r.to_json() } else { r.to_text() };
            Outcome {
                stdout,
                stderr: String::new(),
                code: r.exit_code(),
            }
        }
    }
}
