use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod table;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(done) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = out.write_all(done.text.as_bytes());
            ExitCode::from(done.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
