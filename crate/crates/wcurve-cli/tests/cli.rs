//! Behavioral tests of the individual subcommands.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Parse the `s,x,y,xp,yp,kf` CSV body into rows of f64.
fn parse_csv(text: &str) -> Vec<Vec<f64>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,x,y,xp,yp,kf"));
    lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn sample_csv_soliton_kf_column_vanishes() {
    let out = run(&[
        "sample", "--c", "0", "--s-min", "-5", "--s-max", "5", "--n", "1001",
    ]);
    assert!(out.status.success());
    let rows = parse_csv(&stdout(&out));
    assert_eq!(rows.len(), 1001);
    for row in &rows {
        assert!(row[5].abs() <= 1e-9, "kf = {}", row[5]);
    }
    // uniform grid spanning the requested range
    assert!((rows[0][0] + 5.0).abs() < 1e-12 && (rows[1000][0] - 5.0).abs() < 1e-12);
}

#[test]
fn sample_csv_round_trips_through_finite_differences() {
    let out = run(&[
        "sample", "--c", "0.5", "--s-min", "-5", "--s-max", "5", "--n", "1001",
    ]);
    let rows = parse_csv(&stdout(&out));
    let h = rows[1][0] - rows[0][0];
    for i in (1..rows.len() - 1).step_by(17) {
        let xp = rows[i][3];
        let yp = rows[i][4];
        let xpp = (rows[i + 1][3] - rows[i - 1][3]) / (2.0 * h);
        let ypp = (rows[i + 1][4] - rows[i - 1][4]) / (2.0 * h);
        let kf = xp * ypp - xpp * yp - xp;
        assert!(
            (kf - rows[i][5]).abs() <= 1e-4,
            "row {i}: {kf} vs {}",
            rows[i][5]
        );
    }
}

#[test]
fn sample_clips_supercritical_domain_with_warning() {
    let out = run(&[
        "sample", "--c", "2", "--s-min", "-10", "--s-max", "10", "--n", "101",
    ]);
    assert!(out.status.success());
    let warning = String::from_utf8_lossy(&out.stderr);
    assert!(
        warning.contains("domain clipped to (-1.8137994, 1.8137994)"),
        "stderr: {warning}"
    );
    let rows = parse_csv(&stdout(&out));
    assert!(rows.iter().all(|r| r[0].abs() < 1.8137994));
    // all samples carry kf = 2
    for row in &rows {
        assert!((row[5] - 2.0).abs() <= 1e-9);
    }
}

#[test]
fn sample_svg_is_well_formed() {
    let n = 257;
    let out = run(&["sample", "--c", "0.5", "--n", "257", "--format", "svg"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert!(svg.contains("k_phi = 0.5"));
    // polyline point count equals n
    let points = svg
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    assert_eq!(points.split_whitespace().count(), n);
}

#[test]
fn sample_reflect_selects_the_mirrored_member() {
    let out = run(&["sample", "--c", "0", "--reflect", "--n", "101"]);
    assert!(out.status.success());
    let rows = parse_csv(&stdout(&out));
    // the mirrored soliton spans (-pi, 0) instead of (0, pi)
    assert!(rows
        .iter()
        .all(|r| r[1] < 0.0 && r[1] > -std::f64::consts::PI));
    for row in &rows {
        assert!(row[5].abs() <= 1e-9);
    }
}

#[test]
fn sample_rejects_unknown_format() {
    assert_eq!(
        run(&["sample", "--c", "0", "--format", "png"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn geodesic_vertical_segment() {
    let out = run(&["geodesic", "--p", "1,0", "--q", "1,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind=vertical-segment"));
    let expect = f64::exp(2.0) - 1.0;
    let len: f64 = text
        .lines()
        .find(|l| l.contains("weighted_length="))
        .unwrap()
        .split('=')
        .next_back()
        .unwrap()
        .parse()
        .unwrap();
    assert!((len - expect).abs() < 1e-9);
}

#[test]
fn geodesic_recovers_canonical_arch() {
    // endpoints forward-evaluated on the canonical arch at s = -1 and 1
    let p = format!(
        "{},{}",
        2.0 * (-1.0f64).exp().atan(),
        (1.0f64.exp() + (-1.0f64).exp()).ln()
    );
    let q = format!(
        "{},{}",
        2.0 * 1.0f64.exp().atan(),
        (1.0f64.exp() + (-1.0f64).exp()).ln()
    );
    let out = run(&["geodesic", "--p", &p, "--q", &q]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind=grim-reaper-arc"));
    let x0: f64 = text
        .lines()
        .find(|l| l.contains("x0="))
        .unwrap()
        .split("x0=")
        .nth(1)
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(x0.abs() < 1e-8, "x0 = {x0}");
}

#[test]
fn geodesic_rejects_coincident_points() {
    assert_eq!(
        run(&["geodesic", "--p", "1,1", "--q", "1,1"]).status.code(),
        Some(1)
    );
}

#[test]
fn sweep_emits_convergence_rows() {
    let out = run(&["sweep"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("c,r_min,r_max,sup_dev"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 3);
    let expected = [0.1055416, 0.0100505, 0.0010005];
    for (row, expect) in rows.iter().zip(expected) {
        assert!(
            (row[3] - expect).abs() < 1e-7,
            "sup_dev {} vs {expect}",
            row[3]
        );
        // closed-form extremes are reciprocal
        assert!((row[1] * row[2] - 1.0).abs() < 1e-12);
    }
}

#[test]
fn oracle_reports_small_deviation() {
    let out = run(&[
        "oracle", "--c", "-1", "--step", "1e-3", "--s-min", "-3", "--s-max", "3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let dev: f64 = text
        .lines()
        .find(|l| l.contains("max_deviation="))
        .unwrap()
        .split('=')
        .next_back()
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev < 1e-8, "deviation {dev}");
}

#[test]
fn verify_restricted_grid_passes() {
    let out = run(&["verify", "--c-list", "0,2", "--step", "1e-3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
