use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rodrigues_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = run(cli);
    std::io::stdout().write_all(outcome.stdout.as_bytes()).expect("stdout");
    std::io::stderr().write_all(outcome.stderr.as_bytes()).expect("stderr");
    ExitCode::from(outcome.code)
}
