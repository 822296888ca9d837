//! Command-line front end for `symrep`: argument handling, the module
//! expression language, an on-disk module cache and report rendering.

pub mod cache;
mod commands;
pub mod config;
pub mod expr;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;

use config::{Cli, RunConfig};
use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] symrep::Error),
    #[error("cache: {0}")]
    Cache(String),
}

impl CliError {
    /// 2 for bad input, limits and environment problems; 1 when a
    /// computation itself gave up.
    pub fn exit_code(&self) -> i32 {
        use symrep::Error as E;
        match self {
            CliError::Usage(_) | CliError::Cache(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidModulus(_)
                | E::SizeMismatch(..)
                | E::MalformedPartition(_)
                | E::NotRegular(..)
                | E::NotRestricted(..)
                | E::ModuleMismatch(_)
                | E::RegularLimit { .. }
                | E::SmallCharacteristic(_)
                | E::Expression(_) => 2,
                _ => 1,
            },
        }
    }
}

/// Parses `args`, runs the command and prints its report to stdout.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = execute(&cli);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.render(cli.global.format).as_bytes());
    let _ = out.flush();
    report.exit_code
}

/// Runs a parsed command. Failures are folded into the report.
pub fn execute(cli: &Cli) -> Report {
    let start = Instant::now();
    let mut report = Report::new(cli);
    match RunConfig::from_args(&cli.global) {
        Ok(cfg) => {
            report.config = Some(cfg.clone());
            match commands::dispatch(&cfg, &cli.command) {
                Ok(outcome) => report.finish(outcome),
                Err(e) => report.fail(&e),
            }
        }
        Err(e) => report.fail(&e),
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}
