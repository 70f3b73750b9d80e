//! Step-table serialization: CSV (comma, LF, header row) and JSON.
//!
//! Numbers render as the shortest round-trip decimal in float mode and as
//! the exact decimal expansion in exact mode, so emitted files are stable
//! across platforms and re-parse without loss.

use midpoint_ellipse::analysis::ErrorReport;
use midpoint_ellipse::ellipse::Region;
use midpoint_ellipse::scalar::GridScalar;
use midpoint_ellipse::trace::QuadrantTrace;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Mode;
use crate::CliError;

/// Column arrangement of the CSV table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableLayout {
    /// The eight data columns plus a trailing `region` column.
    WithRegion,
    /// The classic 8-column arrangement of hand-worked step tables,
    /// useful for diffing against transcriptions.
    Classic,
}

pub const CSV_HEADER: &str = "x,y,p,x_next,y_next,p_next,two_b2_x_next,two_a2_y_next,region";
pub const CSV_HEADER_CLASSIC: &str = "x,y,P'_k,x_{k+1},y_{k+1},P'_{k+1},2b^2x_{k+1},2a^2y_{k+1}";

/// Renders the step table as CSV, one row per decision step.
pub fn trace_csv<S: GridScalar>(trace: &QuadrantTrace<S>, layout: TableLayout) -> String {
    let mut out = String::new();
    match layout {
        TableLayout::WithRegion => {
            out.push_str(CSV_HEADER);
            out.push('\n');
        }
        TableLayout::Classic => {
            out.push_str(CSV_HEADER_CLASSIC);
            out.push('\n');
        }
    }
    for row in trace.steps() {
        let cells = [
            row.before.x().to_decimal_string(),
            row.before.y().to_decimal_string(),
            row.p_before.to_decimal_string(),
            row.after.x().to_decimal_string(),
            row.after.y().to_decimal_string(),
            row.p_after.to_decimal_string(),
            row.lhs.to_decimal_string(),
            row.rhs.to_decimal_string(),
        ];
        out.push_str(&cells.join(","));
        if layout == TableLayout::WithRegion {
            out.push(',');
            out.push_str(&row.region.to_string());
        }
        out.push('\n');
    }
    out
}

/// One re-parsed CSV data row.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedRow<S: GridScalar> {
    pub x: S,
    pub y: S,
    pub p: S,
    pub x_next: S,
    pub y_next: S,
    pub p_next: S,
    pub lhs: S,
    pub rhs: S,
    pub region: Region,
}

/// Reads back a `WithRegion` CSV table.
pub fn parse_trace_csv<S: GridScalar>(text: &str) -> Result<Vec<ParsedRow<S>>, CliError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => {
            return Err(CliError::Invalid(format!(
                "unrecognized CSV header: {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 9 {
            return Err(CliError::Invalid(format!(
                "line {}: expected 9 cells, got {}",
                lineno + 2,
                cells.len()
            )));
        }
        let num = |cell: &str| {
            S::parse_decimal(cell)
                .map_err(|err| CliError::Invalid(format!("line {}: {err}", lineno + 2)))
        };
        let region = match cells[8] {
            "R1" => Region::R1,
            "R2" => Region::R2,
            other => {
                return Err(CliError::Invalid(format!(
                    "line {}: unknown region `{other}`",
                    lineno + 2
                )))
            }
        };
        rows.push(ParsedRow {
            x: num(cells[0])?,
            y: num(cells[1])?,
            p: num(cells[2])?,
            x_next: num(cells[3])?,
            y_next: num(cells[4])?,
            p_next: num(cells[5])?,
            lhs: num(cells[6])?,
            rhs: num(cells[7])?,
            region,
        });
    }
    Ok(rows)
}

#[derive(Serialize)]
struct TraceDoc {
    spec: Value,
    step: Value,
    steps: Vec<Value>,
    errors: Value,
}

/// Renders the trace plus its error report as one JSON document with
/// `spec`, `step`, `steps` and `errors` keys. Numbers stay JSON numbers in
/// float mode and become exact decimal strings in exact mode.
pub fn trace_json<S: GridScalar>(
    trace: &QuadrantTrace<S>,
    report: &ErrorReport<S>,
    mode: Mode,
) -> String {
    let val = |v: &S| match mode {
        Mode::Float => json!(v.to_f64()),
        Mode::Exact => json!(v.to_decimal_string()),
    };

    let steps: Vec<Value> = trace
        .steps()
        .iter()
        .map(|row| {
            json!({
                "x": val(row.before.x()),
                "y": val(row.before.y()),
                "p": val(&row.p_before),
                "x_next": val(row.after.x()),
                "y_next": val(row.after.y()),
                "p_next": val(&row.p_after),
                "two_b2_x_next": val(&row.lhs),
                "two_a2_y_next": val(&row.rhs),
                "region": row.region.to_string(),
            })
        })
        .collect();

    let per_point: Vec<Value> = report
        .per_point
        .iter()
        .map(|err| {
            json!({
                "x": val(err.point.x()),
                "y": val(err.point.y()),
                "algebraic_residual": err.algebraic_residual,
                "geometric_distance": err.geometric_distance,
            })
        })
        .collect();

    let doc = TraceDoc {
        spec: json!({ "a": val(trace.spec().a()), "b": val(trace.spec().b()) }),
        step: json!({ "h": val(trace.step().h()), "mode": mode.label() }),
        steps,
        errors: json!({
            "per_point": per_point,
            "mean_geometric": report.mean_geometric,
            "max_geometric": report.max_geometric,
            "mean_algebraic": report.mean_algebraic,
            "total_iterations": report.total_iterations,
        }),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}
