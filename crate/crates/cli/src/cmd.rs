//! Subcommand execution, generic over the arithmetic mode.

use std::io::Write as _;
use std::path::Path;

use midpoint_ellipse::analysis::{compare_steps_with, error_report};
use midpoint_ellipse::ellipse::GridStep;
use midpoint_ellipse::scalar::GridScalar;
use midpoint_ellipse::trace::trace_quadrant_with;
use num_rational::BigRational;

use crate::args::{
    build_spec, build_step, Cli, Command, CompareArgs, Format, Mode, RenderArgs, TraceArgs,
};
use crate::render::{detect_format, render_comparison};
use crate::table::{trace_csv, trace_json, TableLayout};
use crate::{report, CliError};

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Trace(args) => match args.common.mode {
            Mode::Float => run_trace::<f64>(args),
            Mode::Exact => run_trace::<BigRational>(args),
        },
        Command::Compare(args) => match args.common.mode {
            Mode::Float => run_compare::<f64>(args),
            Mode::Exact => run_compare::<BigRational>(args),
        },
        Command::Render(args) => match args.common.mode {
            Mode::Float => run_render::<f64>(args),
            Mode::Exact => run_render::<BigRational>(args),
        },
    }
}

fn run_trace<S: GridScalar>(args: &TraceArgs) -> Result<(), CliError> {
    let spec = build_spec::<S>(&args.common)?;
    let step = build_step(&spec, &args.h)?;
    let trace = trace_quadrant_with(&spec, &step, args.common.trace_options());

    let output = match args.format {
        Format::Csv => {
            let layout = if args.paper_layout {
                TableLayout::Classic
            } else {
                TableLayout::WithRegion
            };
            trace_csv(&trace, layout)
        }
        Format::Json => trace_json(&trace, &error_report(&trace), args.common.mode),
    };
    write_output(args.out.as_deref(), output.as_bytes())
}

fn run_compare<S: GridScalar>(args: &CompareArgs) -> Result<(), CliError> {
    let spec = build_spec::<S>(&args.common)?;
    let steps: Vec<GridStep<S>> = args
        .h
        .iter()
        .map(|text| build_step(&spec, text))
        .collect::<Result<_, _>>()?;
    if steps.is_empty() {
        return Err(CliError::Invalid(
            "--h: expected at least one grid width".into(),
        ));
    }

    let reports = compare_steps_with(&spec, &steps, args.common.trace_options());
    let body = match args.format {
        Format::Csv => report::compare_csv(&reports),
        Format::Json => report::compare_json(&reports, args.common.mode),
    };
    let summary = report::summary_text(&reports);

    match &args.out {
        Some(path) => {
            std::fs::write(path, body)?;
            print!("{summary}");
        }
        None => {
            print!("{body}");
            println!();
            print!("{summary}");
        }
    }
    std::io::stdout().flush()?;
    Ok(())
}

fn run_render<S: GridScalar>(args: &RenderArgs) -> Result<(), CliError> {
    let spec = build_spec::<S>(&args.common)?;
    let step = build_step(&spec, &args.h)?;
    let format = detect_format(&args.out)?;
    let trace = trace_quadrant_with(&spec, &step, args.common.trace_options());
    render_comparison(&trace, format, &args.out)
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}
