//! Command-line front end: step-trace tables (CSV/JSON), grid-width
//! comparison reports, and comparison figures (SVG/PGM).

pub mod args;
pub mod cmd;
pub mod render;
pub mod report;
pub mod table;

use std::fmt;

/// Command failures, split by exit code: bad input exits 2, I/O exits 1.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}
