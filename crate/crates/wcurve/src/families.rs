//! Closed-form families of constant weighted-curvature curves under `e^y`.
//!
//! For every real `c` there is a canonical curve with weighted curvature
//! identically `c`, plus straight-line solutions when `|c| <= 1`. The five
//! branches are dispatched on `c`:
//!
//! * `c < -1` and `c > 1` — bounded parameter interval, the curve winds as
//!   `tan` sweeps one period;
//! * `c = -1` and `c = 1` — rational tangent families sharing one trace with
//!   opposite orientations;
//! * `-1 < c < 1` — exponential families asymptotic to the line solutions
//!   (`c = 0` is the translating soliton of curve shortening flow).
//!
//! All evaluators are pure; a [`ClassifiedCurve`] is immutable and `Copy`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{CurveSamples, Point2};

/// Dispatch band around `c = +-1`: inputs within this distance are snapped to
/// the exact rational family (the limits agree; the general formulas lose
/// precision as `sqrt(1 - c^2)` degenerates).
pub const BRANCH_SNAP_TOL: f64 = 1e-12;

/// The five branches of the classification, keyed by `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `c < -1`
    SubNegOne,
    /// `c = -1`
    NegOne,
    /// `-1 < c < 1`
    Open,
    /// `c = 1`
    PlusOne,
    /// `c > 1`
    SuperOne,
}

/// First and second arc-length derivatives of a plane curve at one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    pub xp: f64,
    pub yp: f64,
    pub xpp: f64,
    pub ypp: f64,
}

/// A canonical constant weighted-curvature curve, selected by `c`.
///
/// `reflect` picks the mirrored family member where one exists: on the open
/// branch it swaps between the two exponential solutions (the `+-` pair of
/// the zero-curvature soliton at `c = 0`). For `|c| >= 1` the canonical
/// representative is its own mirror (`x` odd, `y` even in `s`), so `reflect`
/// does not change the evaluations there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedCurve {
    c: f64,
    branch: Branch,
    reflect: bool,
}

impl ClassifiedCurve {
    /// Canonical representative for `c` (`reflect = false`) or its mirror.
    /// Total over finite `c`; values within [`BRANCH_SNAP_TOL`] of `+-1`
    /// are snapped to the exact `c = +-1` family.
    pub fn new(c: f64, reflect: bool) -> Self {
        assert!(c.is_finite(), "curvature constant must be finite");
        let c = if (c - 1.0).abs() < BRANCH_SNAP_TOL {
            1.0
        } else if (c + 1.0).abs() < BRANCH_SNAP_TOL {
            -1.0
        } else {
            c
        };
        let branch = if c < -1.0 {
            Branch::SubNegOne
        } else if c == -1.0 {
            Branch::NegOne
        } else if c < 1.0 {
            Branch::Open
        } else if c == 1.0 {
            Branch::PlusOne
        } else {
            Branch::SuperOne
        };
        ClassifiedCurve { c, branch, reflect }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn reflect(&self) -> bool {
        self.reflect
    }

    /// Open parameter interval on which the curve is defined: all of the
    /// reals for `|c| <= 1`, `(-pi/sqrt(c^2-1), pi/sqrt(c^2-1))` otherwise.
    pub fn domain(&self) -> (f64, f64) {
        match self.branch {
            Branch::SubNegOne | Branch::SuperOne => {
                let half = PI / (self.c * self.c - 1.0).sqrt();
                (-half, half)
            }
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// The derived modulus of the branch formulas: `sqrt((c-1)/(c+1))` for
    /// `|c| > 1`, `sqrt((1-c)/(1+c))` for `|c| < 1`, absent at `c = +-1`.
    pub fn aux_constant(&self) -> Option<f64> {
        match self.branch {
            Branch::SubNegOne | Branch::SuperOne => Some(((self.c - 1.0) / (self.c + 1.0)).sqrt()),
            Branch::Open => Some(((1.0 - self.c) / (1.0 + self.c)).sqrt()),
            _ => None,
        }
    }

    fn check_domain(&self, s: f64) -> Result<()> {
        let (lo, hi) = self.domain();
        if !s.is_finite() || s <= lo || s >= hi {
            return Err(Error::OutOfDomain { s, lo, hi });
        }
        Ok(())
    }

    /// Position at parameter `s`. The integration constants are fixed so the
    /// branch formulas hold verbatim; other solutions are translates.
    pub fn eval(&self, s: f64) -> Result<Point2> {
        self.check_domain(s)?;
        if self.reflect && self.branch != Branch::Open {
            let p = self.eval_canonical(-s);
            return Ok(Point2::new(-p.x, p.y));
        }
        Ok(self.eval_canonical(s))
    }

    /// Analytic first and second derivatives at `s`; the returned tangent is
    /// unit and the weighted curvature evaluates to `c` up to roundoff.
    pub fn eval_derivatives(&self, s: f64) -> Result<Derivatives> {
        self.check_domain(s)?;
        if self.reflect && self.branch != Branch::Open {
            let d = self.derivatives_canonical(-s);
            return Ok(Derivatives {
                xp: d.xp,
                yp: -d.yp,
                xpp: -d.xpp,
                ypp: d.ypp,
            });
        }
        Ok(self.derivatives_canonical(s))
    }

    /// Doubled tangent angle at `s`, in `(-pi, pi]`: the tangent is
    /// `(-cos(2 xi), sin(2 xi))` and this returns `2 xi`.
    pub fn tangent_angle(&self, s: f64) -> Result<f64> {
        let d = self.eval_derivatives(s)?;
        Ok(d.yp.atan2(-d.xp))
    }

    fn eval_canonical(&self, s: f64) -> Point2 {
        match self.branch {
            Branch::NegOne => Point2::new(s - 2.0 * s.atan(), (s * s).ln_1p()),
            Branch::PlusOne => Point2::new(2.0 * s.atan() - s, (s * s).ln_1p()),
            Branch::Open => {
                let c = self.c;
                let k = (1.0 - c * c).sqrt();
                let u = k * s;
                if self.reflect {
                    let x = -2.0 * ((u.exp() + c) / k).atan() - c * s;
                    Point2::new(x, ln_two_cosh_plus(u, 2.0 * c))
                } else {
                    let x = 2.0 * ((u.exp() - c) / k).atan() - c * s;
                    Point2::new(x, ln_two_cosh_plus(u, -2.0 * c))
                }
            }
            Branch::SubNegOne | Branch::SuperOne => {
                let c = self.c;
                let omega = (c * c - 1.0).sqrt();
                let a = ((c - 1.0) / (c + 1.0)).sqrt();
                let sign = if c > 1.0 { 1.0 } else { -1.0 };
                let x = sign * 2.0 * (a * (0.5 * omega * s).tan()).atan() - c * s;
                let y = ((c + (omega * s).cos()) / (c + 1.0)).ln();
                Point2::new(x, y)
            }
        }
    }

    fn derivatives_canonical(&self, s: f64) -> Derivatives {
        match self.branch {
            Branch::NegOne => {
                let q = 1.0 + s * s;
                Derivatives {
                    xp: (s * s - 1.0) / q,
                    yp: 2.0 * s / q,
                    xpp: 4.0 * s / (q * q),
                    ypp: 2.0 * (1.0 - s * s) / (q * q),
                }
            }
            Branch::PlusOne => {
                let q = 1.0 + s * s;
                Derivatives {
                    xp: (1.0 - s * s) / q,
                    yp: 2.0 * s / q,
                    xpp: -4.0 * s / (q * q),
                    ypp: 2.0 * (1.0 - s * s) / (q * q),
                }
            }
            Branch::Open => {
                let c = self.c;
                let k = (1.0 - c * c).sqrt();
                let u = k * s;
                let sech = 1.0 / u.cosh();
                let tanh = u.tanh();
                if self.reflect {
                    let den = 1.0 + c * sech;
                    Derivatives {
                        xp: -k * k * sech / den - c,
                        yp: k * tanh / den,
                        xpp: k * k * k * tanh * sech / (den * den),
                        ypp: k * k * sech * (sech + c) / (den * den),
                    }
                } else {
                    let den = 1.0 - c * sech;
                    Derivatives {
                        xp: k * k * sech / den - c,
                        yp: k * tanh / den,
                        xpp: -k * k * k * tanh * sech / (den * den),
                        ypp: k * k * sech * (sech - c) / (den * den),
                    }
                }
            }
            Branch::SubNegOne | Branch::SuperOne => {
                let c = self.c;
                let omega2 = c * c - 1.0;
                let omega = omega2.sqrt();
                let (sin, cos) = (omega * s).sin_cos();
                let den = c + cos;
                Derivatives {
                    xp: -(1.0 + c * cos) / den,
                    yp: -omega * sin / den,
                    xpp: omega * omega2 * sin / (den * den),
                    ypp: -omega2 * (1.0 + c * cos) / (den * den),
                }
            }
        }
    }

    /// Sample the curve on a uniform grid of `n >= 2` points spanning
    /// `[s_min, s_max]`, with analytic derivative columns attached.
    pub fn sample(&self, s_min: f64, s_max: f64, n: usize) -> Result<CurveSamples> {
        if n < 2 {
            return Err(Error::InvalidSamples("fewer than 2 samples"));
        }
        self.check_domain(s_min)?;
        self.check_domain(s_max)?;
        if s_min >= s_max {
            return Err(Error::InvalidSamples("s is not strictly increasing"));
        }
        let h = (s_max - s_min) / (n - 1) as f64;
        let mut s = Vec::with_capacity(n);
        let (mut x, mut y) = (Vec::with_capacity(n), Vec::with_capacity(n));
        let (mut xp, mut yp) = (Vec::with_capacity(n), Vec::with_capacity(n));
        let (mut xpp, mut ypp) = (Vec::with_capacity(n), Vec::with_capacity(n));
        for i in 0..n {
            let si = if i + 1 == n {
                s_max
            } else {
                s_min + i as f64 * h
            };
            let p = self.eval(si)?;
            let d = self.eval_derivatives(si)?;
            s.push(si);
            x.push(p.x);
            y.push(p.y);
            xp.push(d.xp);
            yp.push(d.yp);
            xpp.push(d.xpp);
            ypp.push(d.ypp);
        }
        CurveSamples::with_derivatives(s, x, y, xp, yp, xpp, ypp)
    }
}

/// `ln(e^u + e^{-u} + t)` for `t > -2`, stable for all `u`.
fn ln_two_cosh_plus(u: f64, t: f64) -> f64 {
    let m = u.abs();
    m + ((-2.0 * m).exp() + t * (-m).exp()).ln_1p()
}

/// A straight-line solution of constant weighted curvature `c`.
///
/// The direction satisfies `x' = -c`, `y' = +-sqrt(1 - c^2)`, so the
/// weighted curvature `-x'` equals `c` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSolution {
    pub c: f64,
    pub direction: (f64, f64),
    pub through: Point2,
}

/// All line solutions with weighted curvature `c`, through the origin:
/// two for `|c| < 1`, one (parallel to the x-axis) for `c = +-1`, none for
/// `|c| > 1`.
pub fn lines_for(c: f64) -> Vec<LineSolution> {
    let origin = Point2::new(0.0, 0.0);
    if (c - 1.0).abs() < BRANCH_SNAP_TOL {
        return vec![LineSolution {
            c: 1.0,
            direction: (-1.0, 0.0),
            through: origin,
        }];
    }
    if (c + 1.0).abs() < BRANCH_SNAP_TOL {
        return vec![LineSolution {
            c: -1.0,
            direction: (1.0, 0.0),
            through: origin,
        }];
    }
    if c.abs() < 1.0 {
        let dy = (1.0 - c * c).sqrt();
        return vec![
            LineSolution {
                c,
                direction: (-c, dy),
                through: origin,
            },
            LineSolution {
                c,
                direction: (-c, -dy),
                through: origin,
            },
        ];
    }
    Vec::new()
}

/// The two coordinate functions of the open-branch pair, as printed:
/// `f1, g1` for the canonical member and `f2, g2` for its mirror twin.
fn open_pair(c: f64, s: f64) -> ((f64, f64), (f64, f64)) {
    let k = (1.0 - c * c).sqrt();
    let u = k * s;
    let e = u.exp();
    let f1 = 2.0 * ((e - c) / k).atan() - c * s;
    let f2 = -2.0 * ((e + c) / k).atan() - c * s;
    let g1 = ln_two_cosh_plus(u, -2.0 * c);
    let g2 = ln_two_cosh_plus(u, 2.0 * c);
    ((f1, g1), (f2, g2))
}

/// Residuals of the mirror identities between the two open-branch members:
/// returns `(f1(c,s) + f2(-c,s), g1(c,s) - g2(-c,s))`, both of which vanish
/// to roundoff. Defined for `|c| < 1` only.
pub fn symmetry_check(c: f64, s: f64) -> Result<(f64, f64)> {
    if c.is_nan() || c.abs() >= 1.0 {
        return Err(Error::SymmetryOutOfRange { c });
    }
    let ((f1, g1), _) = open_pair(c, s);
    let (_, (f2m, g2m)) = open_pair(-c, s);
    Ok((f1 + f2m, g1 - g2m))
}

/// Profile kinds a reduced traveling front can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontProfile {
    Line,
    GrimReaper,
}

/// Result of reducing a forced traveling-front equation to the canonical
/// density: a rigid rotation, a rescaling slope, and the resulting profile
/// classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontReduction {
    /// Rotation (radians, in `(-pi, pi]`) aligning the density-exponent
    /// gradient `(-c1, c2 - c)` with the positive y-axis.
    pub rotation: f64,
    /// Magnitude `sqrt(c1^2 + (c2 - c)^2)` of that gradient; rescaling by it
    /// reduces to the canonical density `e^y`.
    pub scale: f64,
    /// Every solution is one of these under the change of coordinates.
    pub classification: [FrontProfile; 2],
}

/// Reduce the traveling-front equation with force gradient `(c1, c2)` and
/// speed `c` to the canonical density. The solutions are the zero
/// weighted-curvature curves under `e^{-c1*x + (c2-c)*y}`: lines and
/// translating solitons. Fails when `c1 = 0` and `c2 = c` (constant density).
pub fn front_reduction(c1: f64, c2: f64, c: f64) -> Result<FrontReduction> {
    let gx = -c1;
    let gy = c2 - c;
    if gx == 0.0 && gy == 0.0 {
        return Err(Error::ConstantDensity);
    }
    let rotation = wrap_angle(FRAC_PI_2 - gy.atan2(gx));
    let scale = gx.hypot(gy);
    Ok(FrontReduction {
        rotation,
        scale,
        classification: [FrontProfile::Line, FrontProfile::GrimReaper],
    })
}

/// Reduce an angle to `(-pi, pi]`.
pub(crate) fn wrap_angle(t: f64) -> f64 {
    let mut r = t % TAU;
    if r <= -PI {
        r += TAU;
    } else if r > PI {
        r -= TAU;
    }
    r
}
