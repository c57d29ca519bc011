mod args;
mod commands;
mod view;

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_IOERR: u8 = 74;

/// A run that produced no report.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EX_USAGE,
            message: message.into(),
        }
    }

    pub fn parse(source: &Path, err: sepcode::Error) -> Self {
        Failure {
            code: EX_DATAERR,
            message: format!("{}: {err}", source.display()),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Failure {
            code: EX_IOERR,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<sepcode::Error> for Failure {
    fn from(err: sepcode::Error) -> Self {
        use sepcode::Error::*;
        let code = match err {
            Parse { .. } | NotBinary | LengthMismatch { .. } | InfeasibleR => EX_DATAERR,
            _ => EX_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SEPCODE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::usage(format!(
                "SEPCODE_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn execute(cli: &Cli) -> Result<commands::Run, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Verify(a) => commands::verify(a),
        Command::Trace(a) => commands::trace(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Compose(a) => commands::compose(a),
    }
}

fn emit(cli: &Cli, report: &commands::RunReport) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    match &cli.json {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EX_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = execute(&cli).and_then(|run| {
        emit(&cli, &run.report)?;
        Ok(run.status)
    });
    match outcome {
        Ok(status) => ExitCode::from(status.code()),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
