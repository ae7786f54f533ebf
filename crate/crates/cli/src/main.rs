mod args;
mod commands;
mod report;

use std::process::ExitCode;

use bargmann_lab::Error;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

const EXIT_USAGE: u8 = 1;
const EXIT_TOLERANCE: u8 = 2;

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("BARGMANN_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow::anyhow!("BARGMANN_LAB_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<Vec<report::Check>> {
    match &cli.command {
        Command::Gram(a) => commands::gram(a),
        Command::Eigres(a) => commands::eigres(a),
        Command::Transform(a) => commands::transform_cmd(a),
        Command::Ncho(a) => commands::ncho(a),
        Command::Ellipse(a) => commands::ellipse(a),
        Command::Toeplitz(a) => commands::toeplitz(a),
        Command::Certify(a) => commands::certify(a),
    }
}

/// Quadrature that cannot meet its own bound is a tolerance failure, not a usage error.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Truncation { .. } | Error::NoConvergence { .. }) => EXIT_TOLERANCE,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(&cli) {
        Ok(checks) if report::summarize(&checks) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_TOLERANCE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
