use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use cpbounds_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(passed) => {
            eprintln!("finished in {:.3?}", start.elapsed());
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
