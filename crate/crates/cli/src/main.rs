mod cli;
mod commands;
mod error;
mod grid;
mod number;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;

use crate::cli::{Cli, JobSpec, THRESHOLDS_ENV};
use crate::error::EXIT_USAGE;

fn run(args: impl IntoIterator<Item = OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let thresholds = std::env::var_os(THRESHOLDS_ENV).map(PathBuf::from);
    match JobSpec::from_cli(cli, thresholds).and_then(commands::execute) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(outcome.text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return error::EXIT_INTERNAL;
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}
