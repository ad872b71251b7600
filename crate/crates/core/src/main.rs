use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prext::cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    eprint!("{}", out.stderr);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.stdout),
        None => std::io::stdout().write_all(out.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(out.code)
}
