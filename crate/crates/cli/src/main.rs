//! `coinv`: command-line access to the `coinvariant` library.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on invalid input.

mod args;
mod commands;
mod golden;
mod output;
mod verify;

use std::process::ExitCode;

use clap::Parser;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] coinvariant::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

/// Whether every check a command ran came out true.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(&cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(CliError::Io(e)) => {
            eprintln!("coinv: i/o error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("coinv: {e}");
            ExitCode::from(2)
        }
    }
}
