//! Comparison figures: the exact curve's first quadrant against the
//! generated staircase, as an SVG plot or a PGM raster.

use std::fmt::Write as _;
use std::path::Path;

use midpoint_ellipse::scalar::GridScalar;
use midpoint_ellipse::trace::QuadrantTrace;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Pgm,
}

/// Picks the output format from the file extension.
pub fn detect_format(path: &Path) -> Result<RenderFormat, CliError> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("svg") => Ok(RenderFormat::Svg),
        Some("pgm") => Ok(RenderFormat::Pgm),
        other => Err(CliError::Invalid(format!(
            "unsupported render format {:?}: use a .svg or .pgm output path",
            other.unwrap_or("<none>")
        ))),
    }
}

/// Renders the figure and writes it to `out`.
pub fn render_comparison<S: GridScalar>(
    trace: &QuadrantTrace<S>,
    format: RenderFormat,
    out: &Path,
) -> Result<(), CliError> {
    let bytes = match format {
        RenderFormat::Svg => render_svg(trace).into_bytes(),
        RenderFormat::Pgm => render_pgm(trace),
    };
    std::fs::write(out, bytes)?;
    Ok(())
}

/// Samples along the exact curve for the smooth polyline.
const CURVE_SEGMENTS: usize = 512;
/// Pixels per axis unit.
const SVG_SCALE: f64 = 64.0;
const SVG_MARGIN: f64 = 40.0;

/// SVG 1.1 figure: axes, the exact quarter-curve as a smooth polyline, the
/// generated staircase with a contrasting dashed stroke, and a legend
/// naming the grid width.
pub fn render_svg<S: GridScalar>(trace: &QuadrantTrace<S>) -> String {
    let a = trace.spec().a().to_f64();
    let b = trace.spec().b().to_f64();
    let width = 2.0 * SVG_MARGIN + a * SVG_SCALE;
    let height = 2.0 * SVG_MARGIN + b * SVG_SCALE;
    let px = |x: f64| SVG_MARGIN + x * SVG_SCALE;
    let py = |y: f64| SVG_MARGIN + (b - y) * SVG_SCALE;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <rect width="{width}" height="{height}" fill="white"/>"#
    );

    // Axes.
    let _ = writeln!(
        svg,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-width="1"/>"##,
        px(0.0),
        py(0.0),
        px(a),
        py(0.0)
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-width="1"/>"##,
        px(0.0),
        py(0.0),
        px(0.0),
        py(b)
    );

    // Exact quarter-curve.
    let mut curve = String::new();
    for k in 0..=CURVE_SEGMENTS {
        let theta = k as f64 / CURVE_SEGMENTS as f64 * std::f64::consts::FRAC_PI_2;
        let _ = write!(curve, "{},{} ", px(a * theta.cos()), py(b * theta.sin()));
    }
    let _ = writeln!(
        svg,
        r##"  <polyline class="exact" points="{}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##,
        curve.trim_end()
    );

    // Generated staircase.
    let mut stair = String::new();
    for point in trace.points() {
        let _ = write!(
            stair,
            "{},{} ",
            px(point.x().to_f64()),
            py(point.y().to_f64())
        );
    }
    let _ = writeln!(
        svg,
        r##"  <polyline class="generated" points="{}" fill="none" stroke="#d62728" stroke-width="1.5" stroke-dasharray="4 2"/>"##,
        stair.trim_end()
    );

    // Legend.
    let h_label = trace.step().h().to_decimal_string();
    let (lx, ly) = (px(0.0) + 12.0, SVG_MARGIN / 2.0);
    let _ = writeln!(
        svg,
        r##"  <text x="{lx}" y="{ly}" font-family="sans-serif" font-size="14" fill="#1f77b4">exact curve</text>"##
    );
    let _ = writeln!(
        svg,
        r##"  <text x="{}" y="{ly}" font-family="sans-serif" font-size="14" fill="#d62728">grid h = {h_label}</text>"##,
        lx + 120.0
    );
    svg.push_str("</svg>\n");
    svg
}

/// Binary PGM (P5) raster, one pixel per grid step with a one-step margin:
/// width `ceil(a/h)+2`, height `ceil(b/h)+2`, generated points dark on a
/// white background.
pub fn render_pgm<S: GridScalar>(trace: &QuadrantTrace<S>) -> Vec<u8> {
    let a = trace.spec().a();
    let b = trace.spec().b();
    let h = trace.step().h();
    let width = (ceil_steps(a, h) + 2) as usize;
    let height = (ceil_steps(b, h) + 2) as usize;

    let mut pixels = vec![255u8; width * height];
    for point in trace.points() {
        let (col, row) = (point.i() as usize, point.j() as usize);
        if col < width && row < height {
            pixels[row * width + col] = 0;
        }
    }

    let mut bytes = format!("P5\n{width} {height}\n255\n").into_bytes();
    bytes.extend_from_slice(&pixels);
    bytes
}

fn ceil_steps<S: GridScalar>(len: &S, step: &S) -> u64 {
    let whole = S::whole_steps(len, step);
    let covered = S::from_u64(whole) * step.clone();
    if covered.grid_cmp(len) == std::cmp::Ordering::Equal {
        whole
    } else {
        whole + 1
    }
}
