use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = nichols::cli::Cli::parse();
    let out = nichols::cli::run(&cli);
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    if !out.stderr.is_empty() {
        eprint!("{}", out.stderr);
    }
    ExitCode::from(out.code)
}
