use std::process::ExitCode;

use clap::Parser;
use xprod_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if let Some(err) = &outcome.error {
        eprintln!("error: {err}");
    }
    match &cli.out {
        Some(path) if outcome.error.is_none() => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        _ => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.code as u8)
}
