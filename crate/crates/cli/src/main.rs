use std::process::ExitCode;

use auslab::{run, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(outcome) => {
            print!("{}", outcome.report.to_json());
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(CliError::Info(msg)) => {
            print!("{msg}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
