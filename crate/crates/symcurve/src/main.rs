use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use symcurve::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = execute(&cli);
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(run.code)
}
