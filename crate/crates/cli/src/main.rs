mod args;
mod commands;
mod input;
mod report;

use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use oddballoon::Error;

use args::{Cli, Command, Format};

const EXIT_FAILURE: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_OUT_OF_SCOPE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::OutOfScope(_) => EXIT_OUT_OF_SCOPE,
        _ => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_FAILURE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    let start = Instant::now();
    let result = match &cli.command {
        Command::Invariants(a) => commands::invariants(a),
        Command::Balloon(a) => commands::balloon(a),
        Command::Divisions(a) => commands::divisions(a),
        Command::Decompose(a) => commands::decompose(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Construct(a) => commands::construct(a),
        Command::CheckFree(a) => commands::check_free(a),
        Command::Oracle(a) => commands::oracle(a, cli.cache_dir.as_deref()),
        Command::Verify(a) => commands::verify(a),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let timing = cli.timing.then(|| start.elapsed().as_millis());
    let rendered = match cli.format {
        Format::Json => Some(outcome.json(timing)),
        Format::Text => Some(outcome.text.clone()),
        Format::Graph6 => outcome.graph6(),
        Format::Dot => outcome.dot(),
    };
    let Some(body) = rendered else {
        eprintln!("error: {} produces no graphs to export as {:?}", outcome.command, cli.format);
        return ExitCode::from(EXIT_FAILURE);
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(body.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(EXIT_FAILURE);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
