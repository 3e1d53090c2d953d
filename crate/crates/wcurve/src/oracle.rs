//! Independent verification path for the closed-form families.
//!
//! The tangent half-angle of a constant weighted-curvature curve satisfies
//! the autonomous scalar equation `xi' = (cos(2 xi) - c)/2`, with the curve
//! recovered from `(x', y') = (-cos(2 xi), sin(2 xi))`. This module
//! integrates that equation with classical fixed-step RK4, reconstructs the
//! positions by the matching RK4 quadrature (reusing the stage values, so
//! the whole pipeline is fourth order), and measures the distance to a
//! closed-form family after superposing the two.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::families::{wrap_angle, Branch, ClassifiedCurve};
use crate::geom::Point2;

/// A numerically integrated tangent-angle trajectory with reconstructed
/// positions. Samples are ascending in `s` and include `s = 0`, where the
/// reconstruction is anchored at the origin.
#[derive(Debug, Clone)]
pub struct OdeTrajectory {
    pub c: f64,
    /// Initial tangent half-angle at `s = 0`.
    pub xi0: f64,
    pub step: f64,
    pub s: Vec<f64>,
    pub xi: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    origin: usize,
}

impl OdeTrajectory {
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Index of the `s = 0` sample.
    pub fn origin(&self) -> usize {
        self.origin
    }
}

/// One RK4 step of the augmented state `(xi, x, y)` with step `h` (either
/// sign). Only `xi` feeds back into the right-hand side, so the position
/// update is the Simpson-type combination of the stage tangents.
fn rk4_step(c: f64, xi: f64, x: f64, y: f64, h: f64) -> (f64, f64, f64) {
    let f = |xi: f64| {
        let (sin, cos) = (2.0 * xi).sin_cos();
        (0.5 * (cos - c), -cos, sin)
    };
    let (k1, gx1, gy1) = f(xi);
    let (k2, gx2, gy2) = f(xi + 0.5 * h * k1);
    let (k3, gx3, gy3) = f(xi + 0.5 * h * k2);
    let (k4, gx4, gy4) = f(xi + h * k3);
    (
        xi + h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4),
        x + h / 6.0 * (gx1 + 2.0 * (gx2 + gx3) + gx4),
        y + h / 6.0 * (gy1 + 2.0 * (gy2 + gy3) + gy4),
    )
}

/// Integrate the tangent-angle equation from `s = 0` outward over
/// `[s_range.0, s_range.1]` with a fixed step. The realized grid consists of
/// whole steps, so the endpoints are reached only when the range is a step
/// multiple. The right-hand side is globally bounded by `(1 + |c|)/2`, so
/// the integration cannot blow up.
pub fn integrate_xi(c: f64, xi0: f64, s_range: (f64, f64), step: f64) -> Result<OdeTrajectory> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidStep { step });
    }
    let (lo, hi) = s_range;
    if !lo.is_finite() || !hi.is_finite() || lo > 0.0 || hi < 0.0 {
        return Err(Error::InvalidRange { lo, hi });
    }
    let n_back = ((-lo) / step * (1.0 + 1e-12)).floor() as usize;
    let n_fwd = (hi / step * (1.0 + 1e-12)).floor() as usize;

    let mut s = Vec::with_capacity(n_back + n_fwd + 1);
    let mut xi = Vec::with_capacity(n_back + n_fwd + 1);
    let mut x = Vec::with_capacity(n_back + n_fwd + 1);
    let mut y = Vec::with_capacity(n_back + n_fwd + 1);

    let (mut cx, mut cxi, mut cxx, mut cyy);
    // backward sweep, collected in reverse
    cxi = xi0;
    cxx = 0.0;
    cyy = 0.0;
    for i in 1..=n_back {
        (cxi, cxx, cyy) = rk4_step(c, cxi, cxx, cyy, -step);
        cx = -(i as f64) * step;
        s.push(cx);
        xi.push(cxi);
        x.push(cxx);
        y.push(cyy);
    }
    s.reverse();
    xi.reverse();
    x.reverse();
    y.reverse();

    let origin = s.len();
    s.push(0.0);
    xi.push(xi0);
    x.push(0.0);
    y.push(0.0);

    cxi = xi0;
    cxx = 0.0;
    cyy = 0.0;
    for i in 1..=n_fwd {
        (cxi, cxx, cyy) = rk4_step(c, cxi, cxx, cyy, step);
        s.push(i as f64 * step);
        xi.push(cxi);
        x.push(cxx);
        y.push(cyy);
    }

    Ok(OdeTrajectory {
        c,
        xi0,
        step,
        s,
        xi,
        x,
        y,
        origin,
    })
}

/// Largest magnitude of `-2 xi' + cos(2 xi) - c` over the interior samples,
/// with `xi'` estimated by central differences. Bounded by `10 * step^2`
/// for the curvature range exercised here.
pub fn max_ode_residual(traj: &OdeTrajectory) -> f64 {
    let n = traj.len();
    let mut worst = 0.0f64;
    for i in 1..n - 1 {
        let d = (traj.xi[i + 1] - traj.xi[i - 1]) / (traj.s[i + 1] - traj.s[i - 1]);
        let r = -2.0 * d + (2.0 * traj.xi[i]).cos() - traj.c;
        worst = worst.max(r.abs());
    }
    worst
}

/// Superposition of a trajectory onto a closed-form curve: the curve point
/// at `s_shift + t` plus `translation` corresponds to the trajectory point
/// at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alignment {
    pub s_shift: f64,
    pub translation: Point2,
}

/// Initial half-angle whose trajectory reproduces the canonical
/// representative of the curve's branch: `pi/2` where the branch formulas
/// have a pole of `tan(xi)` at `s = 0`, and `0` where they have a zero.
pub fn canonical_xi0(curve: &ClassifiedCurve) -> f64 {
    match (curve.branch(), curve.reflect()) {
        (Branch::Open, false) | (Branch::PlusOne, _) => FRAC_PI_2,
        _ => 0.0,
    }
}

/// Window and warp used to scan a branch for a tangent-angle match. For
/// unbounded branches the grid is tan-warped so the asymptotic angles near
/// the line directions are reachable.
fn scan_window(curve: &ClassifiedCurve) -> (f64, f64, bool) {
    match curve.branch() {
        Branch::SubNegOne | Branch::SuperOne => {
            let (lo, hi) = curve.domain();
            let margin = (hi - lo) * 1e-13;
            (lo + margin, hi - margin, false)
        }
        Branch::Open => {
            // beyond |k*s| ~ 26 the tangent angle saturates to the line
            // directions below double resolution
            let k = (1.0 - curve.c() * curve.c()).sqrt();
            let r = (26.0 / k).atan();
            (-r, r, true)
        }
        Branch::NegOne | Branch::PlusOne => {
            let r = 1e12f64.atan();
            (-r, r, true)
        }
    }
}

/// Find the parameter of `curve` whose tangent matches the trajectory's
/// initial tangent, and the translation superposing the two.
///
/// The tangent angle is strictly monotone along every non-line branch, so
/// the match is unique when it exists; a missing match signals an initial
/// condition that belongs to a different branch (or to a line).
pub fn align(traj: &OdeTrajectory, curve: &ClassifiedCurve) -> Result<Alignment> {
    assert!(
        (traj.c - curve.c()).abs() <= 1e-9,
        "trajectory (c = {}) and curve (c = {}) solve different equations",
        traj.c,
        curve.c()
    );
    // a tangent with cos(2 xi0) = c is an invariant line direction; the
    // curved branches only approach it asymptotically
    if ((2.0 * traj.xi0).cos() - curve.c()).abs() <= 1e-12 {
        return Err(Error::NoTangentMatch { c: curve.c() });
    }
    let target = wrap_angle(2.0 * traj.xi0);
    let mismatch = |s: f64| -> Result<f64> { Ok(wrap_angle(curve.tangent_angle(s)? - target)) };

    let (wlo, whi, warped) = scan_window(curve);
    let unwarp = |w: f64| if warped { w.tan() } else { w };

    const SCAN: usize = 8192;
    let mut prev_w = wlo;
    let mut prev_d = mismatch(unwarp(wlo))?;
    let mut bracket = None;
    if prev_d == 0.0 {
        bracket = Some((wlo, wlo));
    }
    for i in 1..=SCAN {
        let w = wlo + (whi - wlo) * i as f64 / SCAN as f64;
        let d = mismatch(unwarp(w))?;
        if d == 0.0 {
            bracket = Some((w, w));
            break;
        }
        // a sign change across the wrap cut is not a root
        if prev_d * d < 0.0 && prev_d.abs() + d.abs() < std::f64::consts::PI {
            bracket = Some((prev_w, w));
            break;
        }
        prev_w = w;
        prev_d = d;
    }
    let (mut a, mut b) = bracket.ok_or(Error::NoTangentMatch { c: curve.c() })?;

    if a != b {
        let mut fa = mismatch(unwarp(a))?;
        for _ in 0..200 {
            if (b - a).abs() <= f64::EPSILON * (a.abs().max(b.abs()).max(1.0)) {
                break;
            }
            let m = 0.5 * (a + b);
            let fm = mismatch(unwarp(m))?;
            if fm == 0.0 {
                a = m;
                b = m;
                break;
            }
            if fa * fm < 0.0 {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
    }
    let mut root = unwarp(0.5 * (a + b));

    // Newton polish: d/ds of the doubled tangent angle is cos(2 xi) - c
    let (lo, hi) = curve.domain();
    for _ in 0..3 {
        let d = mismatch(root)?;
        let deriv = -curve.eval_derivatives(root)?.xp - curve.c();
        if deriv != 0.0 {
            let next = root - d / deriv;
            if next > lo && next < hi {
                root = next;
            }
        }
    }

    let anchor = curve.eval(root)?;
    let o = traj.origin();
    Ok(Alignment {
        s_shift: root,
        translation: Point2::new(traj.x[o] - anchor.x, traj.y[o] - anchor.y),
    })
}

/// Largest Euclidean distance between the trajectory samples and the aligned
/// closed-form curve, over the overlap of their domains.
pub fn max_deviation(
    traj: &OdeTrajectory,
    curve: &ClassifiedCurve,
    alignment: &Alignment,
) -> Result<f64> {
    let (lo, hi) = curve.domain();
    let mut sup = 0.0f64;
    let mut seen = false;
    for i in 0..traj.len() {
        let sc = alignment.s_shift + traj.s[i];
        if sc <= lo || sc >= hi {
            continue;
        }
        let p = curve.eval(sc)?;
        let dx = traj.x[i] - (p.x + alignment.translation.x);
        let dy = traj.y[i] - (p.y + alignment.translation.y);
        sup = sup.max(dx.hypot(dy));
        seen = true;
    }
    if !seen {
        return Err(Error::EmptyOverlap);
    }
    Ok(sup)
}

/// Sample a closed-form curve in trajectory form (absolute positions, no
/// integration error). Useful as the exact reference in self-comparisons.
///
/// The `xi` column holds principal-valued half-angles, which can jump by
/// `pi` where `atan2` wraps; [`max_ode_residual`] is meaningful only for
/// integrated trajectories, whose angle evolves continuously.
pub fn trajectory_from_curve(
    curve: &ClassifiedCurve,
    s_range: (f64, f64),
    step: f64,
) -> Result<OdeTrajectory> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidStep { step });
    }
    let (lo, hi) = s_range;
    if !lo.is_finite() || !hi.is_finite() || lo > 0.0 || hi < 0.0 {
        return Err(Error::InvalidRange { lo, hi });
    }
    let n_back = ((-lo) / step * (1.0 + 1e-12)).floor() as usize;
    let n_fwd = (hi / step * (1.0 + 1e-12)).floor() as usize;
    let mut s = Vec::new();
    let mut xi = Vec::new();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in -(n_back as i64)..=(n_fwd as i64) {
        let si = i as f64 * step;
        let p = curve.eval(si)?;
        s.push(si);
        xi.push(0.5 * curve.tangent_angle(si)?);
        x.push(p.x);
        y.push(p.y);
    }
    let origin = n_back;
    let xi0 = xi[origin];
    Ok(OdeTrajectory {
        c: curve.c(),
        xi0,
        step,
        s,
        xi,
        x,
        y,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, LN_2, PI};

    #[test]
    fn constant_solutions_are_fixed_points() {
        // cos(2 xi0) = c makes the right-hand side vanish identically, and
        // RK4 then preserves the angle bit for bit
        for (c, xi0) in [(0.0, FRAC_PI_4), (-1.0, FRAC_PI_2), (1.0, 0.0)] {
            let traj = integrate_xi(c, xi0, (-2.0, 2.0), 0.01).unwrap();
            assert!(traj.xi.iter().all(|&v| v == xi0));
            // the reconstructed path is a straight line with k_f = c
            let o = traj.origin();
            let dx = traj.x[traj.len() - 1] - traj.x[o];
            let dy = traj.y[traj.len() - 1] - traj.y[o];
            let angle = dy.atan2(dx);
            let expect = wrap_angle(dy_angle(xi0));
            assert!((wrap_angle(angle - expect)).abs() < 1e-12);
        }
    }

    fn dy_angle(xi0: f64) -> f64 {
        let (sin, cos) = (2.0 * xi0).sin_cos();
        sin.atan2(-cos)
    }

    #[test]
    fn soliton_alignment_and_deviation() {
        let curve = ClassifiedCurve::new(0.0, false);
        let traj = integrate_xi(0.0, FRAC_PI_2, (-3.0, 3.0), 1e-3).unwrap();
        let al = align(&traj, &curve).unwrap();
        assert!(al.s_shift.abs() < 1e-9, "s_shift = {}", al.s_shift);
        assert!((al.translation.x + FRAC_PI_2).abs() < 1e-9);
        assert!((al.translation.y + LN_2).abs() < 1e-9);
        let dev = max_deviation(&traj, &curve, &al).unwrap();
        assert!(dev < 1e-8, "deviation {dev}");
    }

    #[test]
    fn supercritical_alignment_at_origin() {
        let curve = ClassifiedCurve::new(2.0, false);
        let (lo, hi) = curve.domain();
        let traj = integrate_xi(2.0, 0.0, (0.9 * lo, 0.9 * hi), 1e-3).unwrap();
        let al = align(&traj, &curve).unwrap();
        assert!(al.s_shift.abs() < 1e-9);
        assert!(al.translation.x.abs() < 1e-9 && al.translation.y.abs() < 1e-9);
        let dev = max_deviation(&traj, &curve, &al).unwrap();
        assert!(dev < 1e-8, "deviation {dev}");
    }

    #[test]
    fn self_alignment_is_zero() {
        let curve = ClassifiedCurve::new(0.5, false);
        let traj = trajectory_from_curve(&curve, (-2.0, 2.0), 0.01).unwrap();
        let al = align(&traj, &curve).unwrap();
        assert!(al.s_shift.abs() < 1e-12);
        assert!(al.translation.x.abs() < 1e-12 && al.translation.y.abs() < 1e-12);
        assert!(max_deviation(&traj, &curve, &al).unwrap() <= 1e-12);
    }

    #[test]
    fn mirrored_open_member_aligns_from_zero_angle() {
        for c in [-0.7, 0.0, 0.5, 0.9] {
            let curve = ClassifiedCurve::new(c, true);
            let xi0 = canonical_xi0(&curve);
            assert_eq!(xi0, 0.0);
            let traj = integrate_xi(c, xi0, (-4.0, 4.0), 1e-3).unwrap();
            let al = align(&traj, &curve).unwrap();
            assert!(al.s_shift.abs() < 1e-9);
            let dev = max_deviation(&traj, &curve, &al).unwrap();
            assert!(dev < 1e-8, "c = {c}: deviation {dev}");
        }
    }

    #[test]
    fn line_initial_condition_has_no_match() {
        // cos(2 xi0) = c is the line solution; the curved branch never
        // attains that tangent
        let traj = integrate_xi(0.0, FRAC_PI_4, (-1.0, 1.0), 0.01).unwrap();
        let curve = ClassifiedCurve::new(0.0, false);
        assert!(matches!(
            align(&traj, &curve),
            Err(Error::NoTangentMatch { .. })
        ));
    }

    #[test]
    fn residual_bound_over_grid() {
        let step = 1e-2;
        for c in [-3.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 3.0] {
            let xi0 = canonical_xi0(&ClassifiedCurve::new(c, false));
            let range = if c.abs() > 1.0 {
                let half = PI / (c * c - 1.0).sqrt();
                (-0.999 * half, 0.999 * half)
            } else {
                (-3.0, 3.0)
            };
            let traj = integrate_xi(c, xi0, range, step).unwrap();
            let res = max_ode_residual(&traj);
            assert!(res <= 10.0 * step * step, "residual {res} at c={c}");
        }
    }

    #[test]
    fn richardson_order_check() {
        // halving the step must cut the deviation by at least 8x on a range
        // where truncation error dominates roundoff
        let curve = ClassifiedCurve::new(2.0, false);
        let (lo, hi) = curve.domain();
        let range = (0.9 * lo, 0.9 * hi);
        let mut devs = Vec::new();
        for step in [2e-2, 1e-2] {
            let traj = integrate_xi(2.0, 0.0, range, step).unwrap();
            let al = align(&traj, &curve).unwrap();
            devs.push(max_deviation(&traj, &curve, &al).unwrap());
        }
        assert!(
            devs[0] >= 8.0 * devs[1],
            "deviations {devs:?} reduce by less than 8x"
        );
    }

    #[test]
    fn invalid_input_errors() {
        assert!(matches!(
            integrate_xi(0.0, 0.0, (-1.0, 1.0), 0.0),
            Err(Error::InvalidStep { .. })
        ));
        assert!(matches!(
            integrate_xi(0.0, 0.0, (0.5, 1.0), 0.01),
            Err(Error::InvalidRange { .. })
        ));
        let traj = integrate_xi(0.0, FRAC_PI_2, (-0.5, 0.5), 0.01).unwrap();
        let curve = ClassifiedCurve::new(2.0, false);
        let al = Alignment {
            s_shift: 100.0,
            translation: Point2::new(0.0, 0.0),
        };
        assert!(matches!(
            max_deviation(&traj, &curve, &al),
            Err(Error::EmptyOverlap)
        ));
    }
}
