use std::io::Write;
use std::process::ExitCode;

use apollonian::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("apollonian: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
