mod args;
mod commands;
mod input;

use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "tournament-cli/1";

/// Why a run stopped without printing results.
#[derive(Debug)]
pub enum Failure {
    /// Exit status 1: the input was read but is not acceptable.
    Invalid(String),
    /// Exit status 2: the command line or its input source is unusable.
    Usage(String),
}

impl From<tournament_core::Error> for Failure {
    fn from(e: tournament_core::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Finished output of a verb, printed only once it is complete.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// False when every step ran but some input was judged invalid.
    pub ok: bool,
}

pub fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && io::stdout().is_terminal()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(output)) => {
            let rendered = if cli.json {
                let mut doc =
                    serde_json::to_string_pretty(&output.json).expect("json values serialize");
                doc.push('\n');
                doc
            } else {
                output.text
            };
            let mut stdout = io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout
                .write_all(rendered.as_bytes())
                .and_then(|_| stdout.flush());
            ExitCode::from(if output.ok { 0 } else { 1 })
        }
        Err(Failure::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
