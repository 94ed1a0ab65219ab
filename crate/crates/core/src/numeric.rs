//! Floating-point cross-checks: residuals of rational solutions, the
//! Poincaré map of periodic equations, and the displacement derivative.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::ring::CurveRing;
use crate::scalar::{Rational, RealField};
use crate::trig::TrigPoly;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryConfig {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// Trajectories with `|x|` above this abort as blow-ups.
    pub escape: f64,
}

impl Default for TrajectoryConfig {
    fn default() -> Self {
        TrajectoryConfig {
            rtol: 1e-10,
            atol: 1e-12,
            max_steps: 200_000,
            escape: 1e8,
        }
    }
}

impl TrajectoryConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rtol > 0.0 && self.atol > 0.0) {
            return Err(Error::Precondition(
                "tolerances must be strictly positive".into(),
            ));
        }
        Ok(())
    }
}

// Dormand–Prince 5(4) tableau.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
// dense output
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// Result of one integration: the end value and the dense-output samples
/// at the requested times.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub x_end: f64,
    pub samples: Vec<f64>,
    pub steps: usize,
    pub rejected: usize,
}

/// Integrate the scalar ODE `x' = f(t, x)` from `t0` to `t1 > t0` with
/// adaptive Dormand–Prince steps; `sample_at` must be sorted and lie in
/// `[t0, t1]`.
pub fn integrate(
    f: impl Fn(f64, f64) -> f64,
    t0: f64,
    x0: f64,
    t1: f64,
    cfg: &TrajectoryConfig,
    sample_at: &[f64],
) -> Result<Solution> {
    cfg.validate()?;
    if t1 <= t0 {
        return Err(Error::Precondition(
            "integration interval must be nonempty".into(),
        ));
    }
    let mut samples = Vec::with_capacity(sample_at.len());
    let mut next_sample = 0;
    while next_sample < sample_at.len() && sample_at[next_sample] <= t0 {
        samples.push(x0);
        next_sample += 1;
    }
    let (mut t, mut x) = (t0, x0);
    let mut k1 = f(t, x);
    let mut h = ((t1 - t0) * 1e-3).min(1e-2);
    let (mut steps, mut rejected) = (0usize, 0usize);
    while t < t1 {
        if steps + rejected >= cfg.max_steps {
            return Err(Error::Numeric(format!(
                "step limit {} reached at t = {t}",
                cfg.max_steps
            )));
        }
        if t + h > t1 {
            h = t1 - t;
        }
        let k2 = f(t + C2 * h, x + h * A21 * k1);
        let k3 = f(t + C3 * h, x + h * (A31 * k1 + A32 * k2));
        let k4 = f(t + C4 * h, x + h * (A41 * k1 + A42 * k2 + A43 * k3));
        let k5 = f(
            t + C5 * h,
            x + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4),
        );
        let k6 = f(
            t + h,
            x + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
        );
        let x_new = x + h * (A71 * k1 + A73 * k3 + A74 * k4 + A75 * k5 + A76 * k6);
        let k7 = f(t + h, x_new);
        let err_est = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        let scale = cfg.atol + cfg.rtol * x.abs().max(x_new.abs());
        let err = (err_est / scale).abs();
        if !x_new.is_finite() || !err.is_finite() {
            if h < 1e-14 * t.abs().max(1.0) {
                return Err(Error::BlowUp {
                    t,
                    limit: cfg.escape,
                });
            }
            h *= 0.2;
            rejected += 1;
            continue;
        }
        let fac = (0.9 * err.powf(-0.2)).clamp(0.2, 10.0);
        if err <= 1.0 {
            let t_new = t + h;
            if next_sample < sample_at.len() && sample_at[next_sample] <= t_new {
                let ydiff = x_new - x;
                let bspl = h * k1 - ydiff;
                let r4 = ydiff - h * k7 - bspl;
                let r5 = h * (D1 * k1 + D3 * k3 + D4 * k4 + D5 * k5 + D6 * k6 + D7 * k7);
                while next_sample < sample_at.len() && sample_at[next_sample] <= t_new {
                    let th = (sample_at[next_sample] - t) / h;
                    let th1 = 1.0 - th;
                    samples.push(x + th * (ydiff + th1 * (bspl + th * (r4 + th1 * r5))));
                    next_sample += 1;
                }
            }
            t = t_new;
            x = x_new;
            k1 = k7;
            steps += 1;
            if x.abs() > cfg.escape {
                return Err(Error::BlowUp {
                    t,
                    limit: cfg.escape,
                });
            }
            h *= fac;
        } else {
            h *= fac.min(1.0);
            rejected += 1;
        }
        if h < 1e-14 * t.abs().max(1.0) {
            // step collapse on a fast-growing branch is a finite-time escape
            if x.abs() > cfg.escape.sqrt() {
                return Err(Error::BlowUp {
                    t,
                    limit: cfg.escape,
                });
            }
            return Err(Error::Numeric(format!("step size underflow at t = {t}")));
        }
    }
    Ok(Solution {
        x_end: x,
        samples,
        steps,
        rejected,
    })
}

/// `a₀ + Σ aₙcos(nt) + bₙsin(nt)` with float coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatTrig {
    pub a0: f64,
    pub harmonics: Vec<(f64, f64)>,
}

impl FloatTrig {
    pub fn from_exact<F: RealField>(x: &TrigPoly<F>) -> Self {
        FloatTrig {
            a0: x.a0().to_f64(),
            harmonics: x
                .harmonics()
                .iter()
                .map(|(a, b)| (a.to_f64(), b.to_f64()))
                .collect(),
        }
    }

    pub fn constant(c: f64) -> Self {
        FloatTrig {
            a0: c,
            harmonics: Vec::new(),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (s1, c1) = t.sin_cos();
        let (mut cn, mut sn) = (1.0, 0.0);
        let mut acc = self.a0;
        for (a, b) in &self.harmonics {
            let c = cn * c1 - sn * s1;
            let s = sn * c1 + cn * s1;
            cn = c;
            sn = s;
            acc += a * cn + b * sn;
        }
        acc
    }
}

/// A periodic Abel equation with float coefficients. `A` and `B` may vanish
/// here, which the exact model excludes; this serves the linear test mode.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericEquation {
    pub a: FloatTrig,
    pub b: FloatTrig,
    pub c: FloatTrig,
}

impl NumericEquation {
    pub fn from_exact(eq: &AbelEquation<TrigPoly<Rational>>) -> Self {
        NumericEquation {
            a: FloatTrig::from_exact(&eq.a),
            b: FloatTrig::from_exact(&eq.b),
            c: FloatTrig::from_exact(&eq.c),
        }
    }

    /// `x' = c·x`.
    pub fn linear(c: f64) -> Self {
        NumericEquation {
            a: FloatTrig::constant(0.0),
            b: FloatTrig::constant(0.0),
            c: FloatTrig::constant(c),
        }
    }

    pub fn rhs(&self, t: f64, x: f64) -> f64 {
        ((self.a.eval(t) * x + self.b.eval(t)) * x + self.c.eval(t)) * x
    }
}

/// `x(2π)` for the solution with `x(0) = x₀`.
pub fn poincare_map(eq: &NumericEquation, x0: f64, cfg: &TrajectoryConfig) -> Result<f64> {
    if x0 == 0.0 {
        return Ok(0.0);
    }
    Ok(integrate(|t, x| eq.rhs(t, x), 0.0, x0, 2.0 * PI, cfg, &[])?.x_end)
}

/// `x(−2π)` for the solution with `x(0) = x₀`, the inverse return map.
pub fn poincare_map_backward(eq: &NumericEquation, x0: f64, cfg: &TrajectoryConfig) -> Result<f64> {
    if x0 == 0.0 {
        return Ok(0.0);
    }
    Ok(integrate(|s, x| -eq.rhs(-s, x), 0.0, x0, 2.0 * PI, cfg, &[])?.x_end)
}

/// `∫₀^{2π} (3A x² + 2B x + C) dt` along a known periodic solution, by
/// composite Simpson with `n` (even) panels. Its sign tells whether the
/// solution repels (`> 0`) or attracts under the forward flow.
pub fn characteristic_exponent(eq: &NumericEquation, x: impl Fn(f64) -> f64, n: usize) -> f64 {
    let n = n.max(2) + n % 2;
    let h = 2.0 * PI / n as f64;
    let g = |t: f64| {
        let xv = x(t);
        (3.0 * eq.a.eval(t) * xv + 2.0 * eq.b.eval(t)) * xv + eq.c.eval(t)
    };
    let mut acc = g(0.0) + g(2.0 * PI);
    for k in 1..n {
        acc += if k % 2 == 1 { 4.0 } else { 2.0 } * g(k as f64 * h);
    }
    acc * h / 3.0
}

/// How a fixed point of the return map was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShootingMethod {
    Forward,
    /// The inverse return map, for orbits that only grow errors forward.
    Backward,
    /// Per-segment defects of the known solution, each segment short enough
    /// that errors grow by at most `e⁵`.
    Defects {
        segments: usize,
    },
}

impl ShootingMethod {
    pub fn label(self) -> String {
        match self {
            ShootingMethod::Forward => "forward".into(),
            ShootingMethod::Backward => "backward".into(),
            ShootingMethod::Defects { segments } => format!("segment-defects({segments})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicityCheck {
    pub x0: f64,
    /// `x(±2π)`, or `x₀` plus the worst segment defect.
    pub x_return: f64,
    pub exponent: f64,
    /// `ln` of the worst error amplification of forward single shooting.
    pub forward_growth: f64,
    pub method: ShootingMethod,
    pub abs_error: f64,
}

/// Growth budget `ln(10³)`: single shooting is used only when no
/// integration error is amplified by more than a thousandfold.
const SINGLE_SHOT_GROWTH: f64 = 6.9;
const SEGMENT_GROWTH: f64 = 5.0;
const GRID: usize = 4000;

/// Cumulative `Λ(t) = ∫₀ᵗ λ`, `λ = 3A x² + 2B x + C`, on a uniform grid.
fn cumulative_exponent(eq: &NumericEquation, x: &impl Fn(f64) -> f64) -> (Vec<f64>, Vec<f64>) {
    let h = 2.0 * PI / GRID as f64;
    let lam = |t: f64| {
        let xv = x(t);
        (3.0 * eq.a.eval(t) * xv + 2.0 * eq.b.eval(t)) * xv + eq.c.eval(t)
    };
    let ts: Vec<f64> = (0..=GRID).map(|k| k as f64 * h).collect();
    let ls: Vec<f64> = ts.iter().map(|&t| lam(t)).collect();
    let mut cum = vec![0.0; GRID + 1];
    for k in 1..=GRID {
        cum[k] = cum[k - 1] + 0.5 * h * (ls[k - 1] + ls[k]);
    }
    (ts, cum)
}

fn shooting_nodes(cum: &[f64]) -> Vec<usize> {
    let mut nodes = vec![0usize];
    let (mut lo, mut hi) = (cum[0], cum[0]);
    for k in 1..=GRID {
        lo = lo.min(cum[k]);
        hi = hi.max(cum[k]);
        if hi - lo > SEGMENT_GROWTH && k - nodes.last().copied().unwrap_or(0) > 1 {
            nodes.push(k - 1);
            lo = cum[k - 1].min(cum[k]);
            hi = cum[k - 1].max(cum[k]);
        }
    }
    nodes.push(GRID);
    nodes
}

fn shooting_config(cfg: &TrajectoryConfig) -> TrajectoryConfig {
    TrajectoryConfig {
        rtol: cfg.rtol.min(1e-12),
        atol: cfg.atol.min(1e-14),
        ..*cfg
    }
}

/// Largest defect `|φ_k(x(t_k)) − x(t_{k+1})|` over the shooting segments of
/// a known solution, with the segment count.
pub fn segment_defects(
    eq: &NumericEquation,
    x: impl Fn(f64) -> f64,
    cfg: &TrajectoryConfig,
) -> Result<(f64, usize)> {
    let (ts, cum) = cumulative_exponent(eq, &x);
    let times: Vec<f64> = shooting_nodes(&cum).iter().map(|&k| ts[k]).collect();
    let cfg = shooting_config(cfg);
    let mut worst = 0.0f64;
    for w in times.windows(2) {
        let end = integrate(|t, v| eq.rhs(t, v), w[0], x(w[0]), w[1], &cfg, &[])?.x_end;
        worst = worst.max((end - x(w[1])).abs());
    }
    Ok((worst, times.len() - 1))
}

/// Check that `x₀ = x(0)` of a known periodic solution is a fixed point of
/// the return map. Single shooting amplifies integration error by up to
/// `exp(max_{t≤s} ∫_t^s λ)`, or its mirror image backward; when that exceeds a thousandfold in both time
/// directions the orbit is checked segment by segment instead, since the
/// fixed point itself is then that sensitive to integration error.
pub fn periodic_solution_check(
    eq: &NumericEquation,
    x: impl Fn(f64) -> f64,
    cfg: &TrajectoryConfig,
) -> Result<PeriodicityCheck> {
    let x0 = x(0.0);
    let (_, cum) = cumulative_exponent(eq, &x);
    let total = cum[GRID];
    // an error made at t is scaled by exp(Λ(s) − Λ(t)) by the time s
    let (mut forward_growth, mut backward_growth) = (0.0f64, 0.0f64);
    let (mut lo, mut hi) = (cum[0], cum[0]);
    for &c in &cum {
        lo = lo.min(c);
        hi = hi.max(c);
        forward_growth = forward_growth.max(c - lo);
        backward_growth = backward_growth.max(hi - c);
    }
    let (x_return, method) = if forward_growth <= SINGLE_SHOT_GROWTH {
        (poincare_map(eq, x0, cfg)?, ShootingMethod::Forward)
    } else if backward_growth <= SINGLE_SHOT_GROWTH {
        (
            poincare_map_backward(eq, x0, cfg)?,
            ShootingMethod::Backward,
        )
    } else {
        let (defect, segments) = segment_defects(eq, &x, cfg)?;
        (x0 + defect, ShootingMethod::Defects { segments })
    };
    Ok(PeriodicityCheck {
        x0,
        x_return,
        exponent: total,
        forward_growth,
        method,
        abs_error: (x_return - x0).abs(),
    })
}

/// `d(x₀) = x(2π; x₀) − x₀`.
pub fn displacement(eq: &NumericEquation, x0: f64, cfg: &TrajectoryConfig) -> Result<f64> {
    Ok(poincare_map(eq, x0, cfg)? - x0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementProbe {
    pub h: f64,
    pub d_plus: f64,
    pub d_minus: f64,
    pub estimate: f64,
    /// `exp(2π·mean(C)) − 1`.
    pub reference: f64,
    pub relative_error: f64,
}

/// Central difference `(d(h) − d(−h))/(2h)` for `d'(0)`, compared with
/// `exp(2π·mean(C)) − 1`, the derivative of the linearized return map.
pub fn displacement_derivative(
    eq: &NumericEquation,
    h: f64,
    cfg: &TrajectoryConfig,
) -> Result<DisplacementProbe> {
    if !(1e-6..=1e-3).contains(&h) {
        return Err(Error::Precondition(format!(
            "finite-difference step {h} outside [1e-6, 1e-3]"
        )));
    }
    let d_plus = displacement(eq, h, cfg)?;
    let d_minus = displacement(eq, -h, cfg)?;
    let estimate = (d_plus - d_minus) / (2.0 * h);
    let reference = (2.0 * PI * eq.c.a0).exp_m1();
    let relative_error = if reference == 0.0 {
        estimate.abs()
    } else {
        ((estimate - reference) / reference).abs()
    };
    Ok(DisplacementProbe {
        h,
        d_plus,
        d_minus,
        estimate,
        reference,
        relative_error,
    })
}

/// `(x₀, d(x₀))` over a grid, in parallel; blow-ups are kept as errors.
pub fn displacement_grid(
    eq: &NumericEquation,
    xs: &[f64],
    cfg: &TrajectoryConfig,
) -> Vec<(f64, Result<f64>)> {
    xs.par_iter()
        .map(|&x0| (x0, displacement(eq, x0, cfg)))
        .collect()
}

/// CSV with header `x0,d` and `NaN` for trajectories that blew up.
pub fn write_grid_csv<W: Write>(out: &mut W, rows: &[(f64, Result<f64>)]) -> Result<()> {
    writeln!(out, "x0,d")?;
    for (x0, d) in rows {
        match d {
            Ok(d) => writeln!(out, "{x0:e},{d:e}")?,
            Err(_) => writeln!(out, "{x0:e},NaN")?,
        }
    }
    Ok(())
}

/// Sampling domain for residual checks: `[−10, 10]` for polynomial
/// coefficients, one period for trigonometric ones.
pub fn residual_domain(trig: bool) -> (f64, f64) {
    if trig {
        (0.0, 2.0 * PI)
    } else {
        (-10.0, 10.0)
    }
}

/// `max |(1/p)' − (A/p³ + B/p² + C/p)|` over `n` equispaced samples.
pub fn residual_sample<E: CurveRing>(
    eq: &AbelEquation<E>,
    p: &E,
    n: usize,
    domain: (f64, f64),
) -> Result<f64> {
    if n == 0 {
        return Err(Error::Precondition(
            "at least one sample is required".into(),
        ));
    }
    let dp = p.derivative();
    let (lo, hi) = domain;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let t = if n == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        };
        let tc = Complex64::new(t, 0.0);
        let pv = p.eval_c64(tc);
        if pv.norm() < 1e-12 {
            return Err(Error::Numeric(format!("p vanishes at the sample t = {t}")));
        }
        let x = pv.inv();
        let lhs = -dp.eval_c64(tc) * x * x;
        let rhs = ((eq.a.eval_c64(tc) * x + eq.b.eval_c64(tc)) * x + eq.c.eval_c64(tc)) * x;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}
