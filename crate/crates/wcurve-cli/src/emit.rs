//! CSV and SVG serialization.
//!
//! Floats are written with 17 significant digits so a round trip through
//! the text form is exact for f64. SVG output is deterministic: the
//! viewport auto-fits the bounding box with 5% padding and the y-axis is
//! flipped for screen coordinates.

use std::fmt::Write;

use wcurve::{weighted_curvature, CurveSamples, RescaleReport};

/// One float, 17 significant digits, round-trip exact.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV with header `s,x,y,xp,yp,kf` and one row per sample.
pub fn sample_csv(samples: &CurveSamples) -> String {
    let d = samples
        .derivatives()
        .expect("sampled curves always carry derivative columns");
    let mut out = String::with_capacity(samples.len() * 96);
    out.push_str("s,x,y,xp,yp,kf\n");
    for i in 0..samples.len() {
        let kf = weighted_curvature(d.xp[i], d.yp[i], d.xpp[i], d.ypp[i])
            .expect("analytic columns are unit-speed");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            num(samples.s()[i]),
            num(samples.x()[i]),
            num(samples.y()[i]),
            num(d.xp[i]),
            num(d.yp[i]),
            num(kf),
        );
    }
    out
}

/// CSV with header `c,r_min,r_max,sup_dev` and one row per report.
pub fn sweep_csv(reports: &[RescaleReport]) -> String {
    let mut out = String::from("c,r_min,r_max,sup_dev\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            num(r.c),
            num(r.r_min),
            num(r.r_max),
            num(r.sup_dev)
        );
    }
    out
}

/// Standalone SVG: one polyline through the samples plus coordinate axes
/// and a caption naming the curvature constant.
pub fn sample_svg(samples: &CurveSamples, c: f64) -> String {
    let xs = samples.x();
    let ys = samples.y();
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..xs.len() {
        x_min = x_min.min(xs[i]);
        x_max = x_max.max(xs[i]);
        y_min = y_min.min(ys[i]);
        y_max = y_max.max(ys[i]);
    }
    let pad_x = 0.05 * (x_max - x_min).max(1e-9);
    let pad_y = 0.05 * (y_max - y_min).max(1e-9);
    x_min -= pad_x;
    x_max += pad_x;
    y_min -= pad_y;
    y_max += pad_y;

    let width = 640.0;
    let height = 480.0;
    let sx = width / (x_max - x_min);
    let sy = height / (y_max - y_min);
    // y flipped: world y_max maps to screen 0
    let px = |x: f64| (x - x_min) * sx;
    let py = |y: f64| (y_max - y) * sy;

    let mut out = String::with_capacity(samples.len() * 24 + 512);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    );
    // coordinate axes where they cross the viewport
    if y_min < 0.0 && y_max > 0.0 {
        let y = py(0.0);
        let _ = writeln!(
            out,
            "  <line x1=\"0\" y1=\"{y:.6}\" x2=\"{width}\" y2=\"{y:.6}\" \
             stroke=\"#999\" stroke-width=\"1\"/>"
        );
    }
    if x_min < 0.0 && x_max > 0.0 {
        let x = px(0.0);
        let _ = writeln!(
            out,
            "  <line x1=\"{x:.6}\" y1=\"0\" x2=\"{x:.6}\" y2=\"{height}\" \
             stroke=\"#999\" stroke-width=\"1\"/>"
        );
    }
    out.push_str("  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"");
    for i in 0..xs.len() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{:.6},{:.6}", px(xs[i]), py(ys[i]));
    }
    out.push_str("\"/>\n");
    let _ = writeln!(
        out,
        "  <text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"14\">k_phi = {c}</text>"
    );
    out.push_str("</svg>\n");
    out
}
