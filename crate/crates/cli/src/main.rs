use std::io::Write;
use std::process::ExitCode;

use bicov_cli::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let config = match Cli::parse().into_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bicov: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match execute(&config) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(outcome.rendered.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("bicov: verification failed at tolerance {:e}", config.tol);
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("bicov: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
