use std::process::ExitCode;

use bloch_pictures::cli::{execute, Cli, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig::from(cli.command);
    ExitCode::from(execute(&config))
}
