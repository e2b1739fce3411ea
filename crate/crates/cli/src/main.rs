//! `jonesvol`: colored Jones polynomials of braid closures, volume-conjecture
//! sweeps, and the deformed figure-eight structure.

mod args;
mod commands;
mod error;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Rendered;
use error::CliError;

fn dispatch(cli: &Cli) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Jones(a) => commands::jones::run(a),
        Command::VolumeLimit(a) => commands::volume::run(a),
        Command::Deform(a) => commands::deform::run(a),
        Command::Check(a) => commands::check::run(a),
    }
}

fn emit(cli: &Cli, rendered: &Rendered) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match (cli.format, &rendered.table) {
        (Format::Json, _) => report::write_json(&mut out, &rendered.doc)?,
        (Format::Csv, Some(t)) => report::write_table_csv(&mut out, &t.header, &t.rows)?,
        (Format::Csv, None) => report::write_flat_csv(&mut out, &rendered.doc)?,
    }
    out.flush()
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot configure {n} threads: {e}")))?;
    }
    let start = Instant::now();
    let rendered = dispatch(cli)?;
    if cli.timings {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    emit(cli, &rendered)?;
    if rendered.failures > 0 {
        return Err(CliError::CheckFailed(rendered.failures));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jonesvol: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
