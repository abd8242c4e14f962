//! Command implementations behind the `auslab` binary.
//!
//! Every command produces a [`RunReport`]; the binary prints it as JSON and
//! optionally persists it under `--out`.

pub mod cli;
pub mod commands;
pub mod report;
pub mod scan;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;

pub use report::RunReport;

/// Environment variable that replaces the built-in default cutoff.
pub const DEFAULT_DEGREE_ENV: &str = "AUSLAB_DEFAULT_DEGREE";

/// Highest degree handled by the free-word oracle; above it Hilbert
/// dimensions are counted from normal forms.
pub const ORACLE_MAX_DEGREE: usize = 14;

/// Largest group the generators may produce.
pub const GROUP_CAP: usize = 4096;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// `--help` or `--version`; printed to stdout with exit code 0.
    Info(String),
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Info(m) => write!(f, "{m}"),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Result of one command: the report plus an optional CSV table.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub csv: Option<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.verified {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }

    /// Writes `<command>.json` (and `<command>.csv`) into `dir`.
    pub fn persist(&self, dir: &Path) -> Result<(), CliError> {
        std::fs::create_dir_all(dir)?;
        let name = &self.report.command;
        std::fs::write(dir.join(format!("{name}.json")), self.report.to_json())?;
        if let Some(csv) = &self.csv {
            std::fs::write(dir.join(format!("{name}.csv")), csv)?;
        }
        Ok(())
    }
}

/// `AUSLAB_DEFAULT_DEGREE` if set, otherwise `fallback`.
pub fn default_degree(fallback: usize) -> Result<usize, CliError> {
    match std::env::var(DEFAULT_DEGREE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{DEFAULT_DEGREE_ENV} must be a nonnegative integer, got '{v}'"))),
        Err(_) => Ok(fallback),
    }
}

/// Default truncation for the ring-level commands: `max(4n + 4, 24)`.
pub fn ring_default_degree(n: usize) -> Result<usize, CliError> {
    default_degree((4 * n + 4).max(24))
}

/// Parses `argv`, runs the command and persists output when asked.
pub fn run<I, T>(argv: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = cli::Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
        _ => usage(e.to_string()),
    })?;
    let outcome = commands::dispatch(&parsed.command)?;
    if let Some(dir) = parsed.command.out_dir() {
        outcome.persist(dir)?;
    }
    Ok(outcome)
}
