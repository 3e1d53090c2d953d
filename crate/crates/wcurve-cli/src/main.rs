//! Command-line surface for the weighted-curvature curve library.
//!
//! Subcommands: `sample` (CSV/SVG curve output), `verify` (invariant
//! suites), `oracle` (one RK4-vs-closed-form comparison), `geodesic`
//! (connect two points), `sweep` (rescaled-curvature convergence CSV).
//!
//! Exit codes are a stable contract: 0 success, 1 usage or validation
//! error, 2 I/O error, 3 geodesic endpoints not connectable.

mod emit;
mod verify;

use std::process::ExitCode;

use wcurve::{
    align, canonical_xi0, connect, convergence_sweep, integrate_xi, max_deviation, ClassifiedCurve,
    GeodesicKind, Point2,
};

/// Errors carrying the process exit code.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

const DEFAULT_GRID: [f64; 9] = [-3.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 3.0];
const USAGE: &str = "\
usage: wcurve <subcommand> [flags]

subcommands:
  sample    --c <f> [--reflect] [--s-min <f>] [--s-max <f>] [--n <int>]
            [--format csv|svg] [--out <path>]
  verify    [--c-list <f,f,...>] [--tol <f>] [--step <f>]
  oracle    --c <f> [--xi0 <f>] [--s-min <f>] [--s-max <f>] [--step <f>]
  geodesic  --p <x,y> --q <x,y>
  sweep     [--c-list <f,f,...>] [--out <path>]

exit codes: 0 ok, 1 usage/validation, 2 I/O, 3 not connectable";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(args: &[String]) -> CliResult<()> {
    let Some(sub) = args.first() else {
        return Err(CliError::usage(USAGE));
    };
    let flags = Flags::parse(&args[1..])?;
    match sub.as_str() {
        "sample" => cmd_sample(&flags),
        "verify" => cmd_verify(&flags),
        "oracle" => cmd_oracle(&flags),
        "geodesic" => cmd_geodesic(&flags),
        "sweep" => cmd_sweep(&flags),
        other => Err(CliError::usage(format!(
            "unknown subcommand `{other}`\n{USAGE}"
        ))),
    }
}

/// Parsed `--name value` flags plus boolean switches.
struct Flags {
    values: Vec<(String, String)>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> CliResult<Self> {
        let mut values = Vec::new();
        let mut switches = Vec::new();
        let mut it = args.iter().peekable();
        while let Some(arg) = it.next() {
            let Some(name) = arg.strip_prefix("--") else {
                return Err(CliError::usage(format!("unexpected argument `{arg}`")));
            };
            if name == "reflect" {
                switches.push(name.to_string());
                continue;
            }
            let Some(value) = it.next() else {
                return Err(CliError::usage(format!("flag --{name} expects a value")));
            };
            values.push((name.to_string(), value.clone()));
        }
        Ok(Flags { values, switches })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn has_switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn f64_or(&self, name: &str, default: f64) -> CliResult<f64> {
        match self.get(name) {
            None => Ok(default),
            Some(v) => parse_f64(name, v),
        }
    }

    fn f64_required(&self, name: &str) -> CliResult<f64> {
        let v = self
            .get(name)
            .ok_or_else(|| CliError::usage(format!("missing required flag --{name}")))?;
        parse_f64(name, v)
    }

    fn usize_or(&self, name: &str, default: usize) -> CliResult<usize> {
        match self.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| CliError::usage(format!("flag --{name}: invalid integer `{v}`"))),
        }
    }

    fn f64_list(&self, name: &str) -> CliResult<Option<Vec<f64>>> {
        let Some(raw) = self.get(name) else {
            return Ok(None);
        };
        let mut out = Vec::new();
        for part in raw.split(',').filter(|p| !p.trim().is_empty()) {
            out.push(parse_f64(name, part.trim())?);
        }
        Ok(Some(out))
    }

    fn point(&self, name: &str) -> CliResult<Point2> {
        let raw = self
            .get(name)
            .ok_or_else(|| CliError::usage(format!("missing required flag --{name}")))?;
        let parts: Vec<&str> = raw.split(',').collect();
        if parts.len() != 2 {
            return Err(CliError::usage(format!(
                "flag --{name}: expected `x,y`, got `{raw}`"
            )));
        }
        Ok(Point2::new(
            parse_f64(name, parts[0].trim())?,
            parse_f64(name, parts[1].trim())?,
        ))
    }
}

fn parse_f64(name: &str, v: &str) -> CliResult<f64> {
    v.parse::<f64>()
        .map_err(|_| CliError::usage(format!("flag --{name}: invalid number `{v}`")))
        .and_then(|x| {
            if x.is_finite() {
                Ok(x)
            } else {
                Err(CliError::usage(format!(
                    "flag --{name}: value must be finite"
                )))
            }
        })
}

fn write_output(out: Option<&str>, contents: &str) -> CliResult<()> {
    match out {
        None | Some("-") => {
            print!("{contents}");
            Ok(())
        }
        Some(path) => std::fs::write(path, contents)
            .map_err(|e| CliError::io(format!("cannot write `{path}`: {e}"))),
    }
}

fn cmd_sample(flags: &Flags) -> CliResult<()> {
    let c = flags.f64_required("c")?;
    let reflect = flags.has_switch("reflect");
    let mut s_min = flags.f64_or("s-min", -5.0)?;
    let mut s_max = flags.f64_or("s-max", 5.0)?;
    let n = flags.usize_or("n", 1001)?;
    let format = flags.get("format").unwrap_or("csv");

    if n < 2 {
        return Err(CliError::usage(format!("--n must be at least 2, got {n}")));
    }
    let curve = ClassifiedCurve::new(c, reflect);
    let (lo, hi) = curve.domain();
    if lo.is_finite() {
        let margin = (hi - lo) * 1e-6;
        let (clip_lo, clip_hi) = (lo + margin, hi - margin);
        if s_min < clip_lo || s_max > clip_hi {
            s_min = s_min.max(clip_lo);
            s_max = s_max.min(clip_hi);
            eprintln!("warning: domain clipped to ({lo:.7}, {hi:.7})");
        }
    }
    if s_min >= s_max {
        return Err(CliError::usage(format!(
            "empty sample range [{s_min}, {s_max}]; admissible domain is ({lo}, {hi})"
        )));
    }

    let samples = curve
        .sample(s_min, s_max, n)
        .map_err(|e| CliError::usage(format!("{e}; admissible domain is ({lo}, {hi})")))?;
    let contents = match format {
        "csv" => emit::sample_csv(&samples),
        "svg" => emit::sample_svg(&samples, c),
        other => {
            return Err(CliError::usage(format!(
                "unknown format `{other}` (csv or svg)"
            )))
        }
    };
    write_output(flags.get("out"), &contents)
}

fn cmd_verify(flags: &Flags) -> CliResult<()> {
    let c_list = flags
        .f64_list("c-list")?
        .unwrap_or_else(|| DEFAULT_GRID.to_vec());
    if c_list.is_empty() {
        return Err(CliError::usage(
            "--c-list must name at least one curvature value",
        ));
    }
    let tol = flags.f64_or("tol", 1e-6)?;
    let step = flags.f64_or("step", 1e-4)?;
    if tol <= 0.0 || step <= 0.0 {
        return Err(CliError::usage("--tol and --step must be positive"));
    }
    let outcome = verify::run(&c_list, tol, step).map_err(|e| CliError::usage(e.to_string()))?;
    for line in &outcome.lines {
        println!("{line}");
    }
    if outcome.failed == 0 {
        println!("verify: all {} checks passed", outcome.total);
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "verify: {} of {} checks failed",
            outcome.failed, outcome.total
        )))
    }
}

fn cmd_oracle(flags: &Flags) -> CliResult<()> {
    let c = flags.f64_required("c")?;
    let reflect = flags.has_switch("reflect");
    let step = flags.f64_or("step", 1e-4)?;
    if step <= 0.0 {
        return Err(CliError::usage("--step must be positive"));
    }
    let curve = ClassifiedCurve::new(c, reflect);
    let (lo, hi) = curve.domain();
    let (default_lo, default_hi) = if lo.is_finite() {
        (lo * 0.9999, hi * 0.9999)
    } else {
        (-5.0, 5.0)
    };
    let s_min = flags.f64_or("s-min", default_lo)?;
    let s_max = flags.f64_or("s-max", default_hi)?;
    let xi0 = flags.f64_or("xi0", canonical_xi0(&curve))?;

    let traj =
        integrate_xi(c, xi0, (s_min, s_max), step).map_err(|e| CliError::usage(e.to_string()))?;
    let al = align(&traj, &curve).map_err(|e| CliError::usage(e.to_string()))?;
    let dev = max_deviation(&traj, &curve, &al).map_err(|e| CliError::usage(e.to_string()))?;
    println!("oracle: c={c} xi0={xi0} step={step} samples={}", traj.len());
    println!(
        "oracle: s_shift={:.12e} translation=({:.12e}, {:.12e})",
        al.s_shift, al.translation.x, al.translation.y
    );
    println!("oracle: max_deviation={dev:.12e}");
    Ok(())
}

fn cmd_geodesic(flags: &Flags) -> CliResult<()> {
    let p = flags.point("p")?;
    let q = flags.point("q")?;
    match connect(p, q) {
        Ok(sol) => {
            let kind = match sol.kind {
                GeodesicKind::VerticalSegment => "vertical-segment",
                GeodesicKind::GrimReaperArc => "grim-reaper-arc",
            };
            println!("geodesic: kind={kind}");
            println!("geodesic: x0={:.12e} y0={:.12e}", sol.x0, sol.y0);
            println!("geodesic: s_p={:.12e} s_q={:.12e}", sol.s_p, sol.s_q);
            println!("geodesic: weighted_length={:.12e}", sol.weighted_len);
            Ok(())
        }
        Err(e @ wcurve::Error::NotConnectable { .. }) => Err(CliError {
            code: 3,
            message: e.to_string(),
        }),
        Err(e) => Err(CliError::usage(e.to_string())),
    }
}

fn cmd_sweep(flags: &Flags) -> CliResult<()> {
    let c_list = flags
        .f64_list("c-list")?
        .unwrap_or_else(|| vec![10.0, 100.0, 1000.0]);
    if c_list.is_empty() {
        return Err(CliError::usage(
            "--c-list must name at least one curvature value",
        ));
    }
    let reports = convergence_sweep(&c_list).map_err(|e| CliError::usage(e.to_string()))?;
    write_output(flags.get("out"), &emit::sweep_csv(&reports))
}
