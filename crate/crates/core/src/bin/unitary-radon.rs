use std::process::ExitCode;

use clap::Parser;
use unitary_radon::cli::{exit_code, run, JobSpec};

fn main() -> ExitCode {
    let job = JobSpec::parse();
    match run(&job) {
        Ok(outcome) => {
            let written = match &job.out {
                Some(path) => std::fs::write(path, &outcome.text),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
