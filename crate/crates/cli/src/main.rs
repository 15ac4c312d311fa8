use std::process::ExitCode;

use clap::Parser;
use secluded_cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match secluded_cli::run(&cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
