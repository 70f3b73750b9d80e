//! Grid-width comparison output: per-width report rows plus a summary that
//! confirms or refutes the expected orderings (more iterations, less error,
//! as the grid narrows).

use midpoint_ellipse::analysis::ErrorReport;
use midpoint_ellipse::scalar::GridScalar;
use serde_json::{json, Value};

use crate::args::Mode;

pub const COMPARE_CSV_HEADER: &str =
    "h,total_iterations,mean_algebraic,mean_geometric,max_geometric";

/// One CSV row per report, in input order.
pub fn compare_csv<S: GridScalar>(reports: &[ErrorReport<S>]) -> String {
    let mut out = String::from(COMPARE_CSV_HEADER);
    out.push('\n');
    for report in reports {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            report.step.h().to_decimal_string(),
            report.total_iterations,
            report.mean_algebraic,
            report.mean_geometric,
            report.max_geometric,
        ));
    }
    out
}

/// The orderings observed across the reports, widest grid first.
pub struct Orderings {
    pub iterations_increase: bool,
    pub mean_geometric_decreases: bool,
    pub max_geometric_decreases: bool,
}

/// Sorts report indices by h descending and checks strict monotonicity of
/// the iteration count (up) and both geometric aggregates (down).
pub fn orderings<S: GridScalar>(reports: &[ErrorReport<S>]) -> Orderings {
    let mut by_width: Vec<&ErrorReport<S>> = reports.iter().collect();
    by_width.sort_by(|p, q| {
        q.step
            .h()
            .to_f64()
            .partial_cmp(&p.step.h().to_f64())
            .expect("finite grid widths")
    });
    let strictly = |ok: fn(f64, f64) -> bool, pick: fn(&ErrorReport<S>) -> f64| {
        by_width
            .windows(2)
            .all(|pair| ok(pick(pair[0]), pick(pair[1])))
    };
    Orderings {
        iterations_increase: strictly(|w, n| n > w, |r| r.total_iterations as f64),
        mean_geometric_decreases: strictly(|w, n| n < w, |r| r.mean_geometric),
        max_geometric_decreases: strictly(|w, n| n < w, |r| r.max_geometric),
    }
}

/// Human-readable summary block.
pub fn summary_text<S: GridScalar>(reports: &[ErrorReport<S>]) -> String {
    let mut by_width: Vec<&ErrorReport<S>> = reports.iter().collect();
    by_width.sort_by(|p, q| {
        q.step
            .h()
            .to_f64()
            .partial_cmp(&p.step.h().to_f64())
            .expect("finite grid widths")
    });

    let mut out = String::from("summary (widest grid first):\n");
    for report in &by_width {
        out.push_str(&format!(
            "  h={}: iterations={}, mean geometric error={}, max={}\n",
            report.step.h().to_decimal_string(),
            report.total_iterations,
            report.mean_geometric,
            report.max_geometric,
        ));
    }
    let verdict = |ok: bool| if ok { "confirmed" } else { "refuted" };
    let ord = orderings(reports);
    out.push_str(&format!(
        "  iterations strictly increase as h narrows: {}\n",
        verdict(ord.iterations_increase)
    ));
    out.push_str(&format!(
        "  mean geometric error strictly decreases: {}\n",
        verdict(ord.mean_geometric_decreases)
    ));
    out.push_str(&format!(
        "  max geometric error strictly decreases: {}\n",
        verdict(ord.max_geometric_decreases)
    ));
    out
}

/// JSON document: the per-width reports plus the ordering summary.
pub fn compare_json<S: GridScalar>(reports: &[ErrorReport<S>], mode: Mode) -> String {
    let rows: Vec<Value> = reports
        .iter()
        .map(|report| {
            let h = report.step.h();
            json!({
                "h": match mode {
                    Mode::Float => json!(h.to_f64()),
                    Mode::Exact => json!(h.to_decimal_string()),
                },
                "total_iterations": report.total_iterations,
                "mean_algebraic": report.mean_algebraic,
                "mean_geometric": report.mean_geometric,
                "max_geometric": report.max_geometric,
            })
        })
        .collect();
    let ord = orderings(reports);
    let doc = json!({
        "reports": rows,
        "summary": {
            "iterations_strictly_increase": ord.iterations_increase,
            "mean_geometric_strictly_decreases": ord.mean_geometric_decreases,
            "max_geometric_strictly_decreases": ord.max_geometric_decreases,
        },
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}
