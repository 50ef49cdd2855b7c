use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use linforest_cli::commands::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = e.print();
            ExitCode::from(EXIT_USAGE)
        }
    }
}
