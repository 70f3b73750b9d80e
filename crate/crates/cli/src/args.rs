//! Flag definitions and input validation.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use midpoint_ellipse::ellipse::{EllipseSpec, GridStep};
use midpoint_ellipse::scalar::GridScalar;
use midpoint_ellipse::trace::{R2SeedRule, TraceOptions};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "midpoint-ellipse",
    version,
    about = "Scan-convert origin-centered, axis-aligned ellipses on a grid of configurable width"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the first-quadrant step table for one grid width
    Trace(TraceArgs),
    /// Trace several grid widths and compare iteration counts and errors
    Compare(CompareArgs),
    /// Render the exact curve against the generated staircase
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// IEEE 754 double precision
    Float,
    /// Arbitrary-precision rationals; tables come out digit-exact
    Exact,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Float => "float64",
            Mode::Exact => "exact-rational",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Semi-major axis length (must exceed --b)
    #[arg(long, allow_negative_numbers = true)]
    pub a: String,

    /// Semi-minor axis length
    #[arg(long, allow_negative_numbers = true)]
    pub b: String,

    /// Arithmetic mode
    #[arg(long, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,

    /// Lower the region-2 seed point by one extra grid step before
    /// reseeding (alternate seeding convention)
    #[arg(long)]
    pub r2_seed_drop: bool,
}

impl CommonArgs {
    pub fn trace_options(&self) -> TraceOptions {
        TraceOptions {
            r2_seed: if self.r2_seed_drop {
                R2SeedRule::DropOneStep
            } else {
                R2SeedRule::LastR1Point
            },
        }
    }
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Grid width
    #[arg(long, allow_negative_numbers = true)]
    pub h: String,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Emit the classic 8-column table layout (no region column)
    #[arg(long)]
    pub paper_layout: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Comma-separated grid widths, e.g. `--h 1,0.5,0.1`
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    pub h: Vec<String>,

    /// Output format for the per-width reports
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the reports to this file; the summary still goes to stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Grid width
    #[arg(long, allow_negative_numbers = true)]
    pub h: String,

    /// Output file; the extension picks the format (.svg or .pgm)
    #[arg(long)]
    pub out: PathBuf,
}

/// Parses one flag value in the active arithmetic mode.
pub fn parse_value<S: GridScalar>(flag: &str, text: &str) -> Result<S, CliError> {
    S::parse_decimal(text).map_err(|err| CliError::Invalid(format!("--{flag}: {err}")))
}

/// Builds the validated ellipse from `--a`/`--b`.
pub fn build_spec<S: GridScalar>(common: &CommonArgs) -> Result<EllipseSpec<S>, CliError> {
    let a = parse_value::<S>("a", &common.a)?;
    let b = parse_value::<S>("b", &common.b)?;
    EllipseSpec::new(a, b).map_err(|err| CliError::Invalid(err.to_string()))
}

/// Builds one validated grid step, naming the offending width on failure.
pub fn build_step<S: GridScalar>(
    spec: &EllipseSpec<S>,
    text: &str,
) -> Result<GridStep<S>, CliError> {
    if text.contains(',') {
        return Err(CliError::Invalid(format!(
            "expected a single grid width, got `{text}`; use `compare` for several"
        )));
    }
    let h = S::parse_decimal(text).map_err(|err| CliError::Invalid(format!("--h: {err}")))?;
    GridStep::new(h, spec).map_err(|err| CliError::Invalid(format!("--h {text}: {err}")))
}
