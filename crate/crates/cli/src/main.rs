use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monomial_lct_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::from(exit::USAGE);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("monlct: {e}");
            ExitCode::from(exit::USAGE)
        }
    }
}
