use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weyl_cli::RunConfig;

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match weyl_cli::run(&config) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.output.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
