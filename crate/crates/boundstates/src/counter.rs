//! Exact S-wave bound-state counting.
//!
//! The number of S-wave bound states of an attractive potential equals the
//! number of zeros (in `0 < r < ∞`) of the zero-energy radial solution
//!
//! ```text
//! u''(r) = V(r) u(r),    u(0) = 0, u'(0) = 1.
//! ```
//!
//! Two independent counters are provided.
//!
//! **Phase counter** (primary). The Prüfer angle `θ` defined through
//! `u'/u = κ cot θ` with local momentum `κ = |V|^(1/2)` satisfies
//!
//! ```text
//! θ' = κ - (V' / 4|V|) sin 2θ,    θ(0) = 0,
//! ```
//!
//! increases through each multiple of π exactly where `u` has a zero, and
//! relaxes toward the nearest multiple of π once the potential has died
//! off: past a radius with negligible remaining `∫κ dr` the count is
//! `N = round(θ/π)`. The rounding also settles the edge of a truncated
//! (or compactly supported) potential, where the linear continuation of
//! `u` contributes one more zero exactly when `θ mod π > π/2`. The angle
//! is monotone through multiples of π, so no oscillation is ever missed,
//! and the step count grows only linearly with `N` — this is the counter
//! to use at strong coupling.
//!
//! **Node counter** (cross-check). Direct integration of `u` itself,
//! recording each sign change (and its radius, by cubic Hermite
//! interpolation inside the accepted step). A final zero beyond the
//! integration horizon is detected from the signs at the edge:
//! `u · u' < 0` there means the linear continuation crosses zero once
//! more. Both counters flag a *marginal* result when the potential sits
//! numerically at a coupling threshold (a new state exactly at the edge
//! of binding), where the count is not a stable integer.
//!
//! For a `-1/r` origin both integrations start from the series
//! `u = r (1 - A r / 2 + ...)` with `A = lim r|V(r)|`, entering the ODE at
//! a radius small enough that the truncation is far below the tolerance.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::quadrature::phase_tail_radius;

/// How close `θ/π` may come to a half integer before the count is
/// declared marginal (the potential sits at a binding threshold).
pub const MARGIN: f64 = 1e-6;

/// Result of the phase counter.
#[derive(Clone, Copy, Debug)]
pub struct CountResult {
    /// Number of S-wave bound states.
    pub count: usize,
    /// Terminal Prüfer angle `θ(r_max)`.
    pub phase: f64,
    /// Integration horizon.
    pub r_max: f64,
    /// The count sits numerically at a binding threshold.
    pub marginal: bool,
}

/// Result of the direct node counter.
#[derive(Clone, Debug)]
pub struct NodeTrace {
    /// Radii of the zeros of `u` inside `(0, r_max]`, ascending.
    pub nodes: Vec<f64>,
    /// One more zero lies beyond `r_max` (`u · u' < 0` at the edge).
    pub tail_node: bool,
    /// Total count: interior nodes plus the tail node.
    pub count: usize,
    /// Integration horizon.
    pub r_max: f64,
    /// `u'` at the edge is too close to zero to decide the tail node.
    pub marginal: bool,
}

/// Counts bound states with the phase method.
pub fn count_states(pot: &Potential, rel_tol: f64) -> Result<CountResult> {
    phase_run(pot, rel_tol, &mut |_, _| {})
}

/// Phase method with the full angle profile `(r, θ)` at every accepted
/// step, for inspection and plotting.
pub fn phase_profile(pot: &Potential, rel_tol: f64) -> Result<(CountResult, Vec<(f64, f64)>)> {
    let mut samples = Vec::new();
    let result = phase_run(pot, rel_tol, &mut |r, theta| samples.push((r, theta)))?;
    Ok((result, samples))
}

fn phase_run(
    pot: &Potential,
    rel_tol: f64,
    record: &mut dyn FnMut(f64, f64),
) -> Result<CountResult> {
    check_tol(rel_tol)?;
    let r_max = phase_tail_radius(pot, 1e-8)?;
    let scale = pot.r_scale();
    let rhs = |r: f64, y: &[f64; 1]| -> [f64; 1] {
        let depth = depth(pot, r);
        if depth <= 0.0 {
            return [0.0];
        }
        [depth.sqrt() - pot.deriv(r) / (4.0 * depth) * (2.0 * y[0]).sin()]
    };
    let h_cap = |r: f64, _: &[f64; 1]| -> f64 {
        let depth = depth(pot, r);
        let rate = if depth > 0.0 {
            depth.sqrt() + pot.deriv(r).abs() / (4.0 * depth)
        } else {
            0.0
        };
        0.7 / (rate + 0.1 / scale)
    };

    let (r0, mut y) = {
        let (r0, u, du) = series_start(pot, scale);
        (r0, [(depth(pot, r0).sqrt() * u / du).atan()])
    };
    record(r0, y[0]);
    for (a, b) in segments(pot, r0, r_max) {
        y = integrate_segment(
            &rhs,
            a,
            b,
            y,
            rel_tol,
            &h_cap,
            &mut |_, _, r, y: &mut [f64; 1]| record(r, y[0]),
        )?;
    }

    let turns = y[0] / PI;
    Ok(CountResult {
        count: turns.round().max(0.0) as usize,
        phase: y[0],
        r_max,
        marginal: (turns - turns.floor() - 0.5).abs() < MARGIN,
    })
}

/// Counts bound states by direct integration of `u`, returning the node
/// radii.
pub fn node_positions(pot: &Potential, rel_tol: f64) -> Result<NodeTrace> {
    check_tol(rel_tol)?;
    let r_max = phase_tail_radius(pot, 1e-8)?;
    let scale = pot.r_scale();
    let rhs = |r: f64, y: &[f64; 2]| -> [f64; 2] { [y[1], pot.eval(r) * y[0]] };
    let h_cap = |r: f64, _: &[f64; 2]| -> f64 {
        let kappa = depth(pot, r).sqrt();
        // Keep steps under a quarter of the local oscillation wavelength
        // so a single step can hold at most one sign change.
        0.25 * PI / (kappa + 0.1 / scale)
    };

    let (r0, mut y) = {
        let (r0, u, du) = series_start(pot, scale);
        (r0, [u, du])
    };
    let mut nodes = Vec::new();
    for (a, b) in segments(pot, r0, r_max) {
        y = integrate_segment(
            &rhs,
            a,
            b,
            y,
            rel_tol,
            &h_cap,
            &mut |ra, ya, rb, yb: &mut [f64; 2]| {
                if ya[0] != 0.0 && yb[0] != 0.0 && (ya[0] > 0.0) != (yb[0] > 0.0) {
                    nodes.push(hermite_root(ra, ya, rb, yb));
                }
                // The zero-energy solution grows at most linearly, but a
                // long horizon can still overflow; the count only needs
                // signs, so rescale freely.
                let m = yb[0].abs().max(yb[1].abs());
                if m > 1e120 {
                    yb[0] /= m;
                    yb[1] /= m;
                }
            },
        )?;
    }

    let (u, du) = (y[0], y[1]);
    let tail_node = u * du < 0.0;
    let marginal = u == 0.0 || (du * r_max / u).abs() < MARGIN;
    Ok(NodeTrace {
        count: nodes.len() + tail_node as usize,
        nodes,
        tail_node,
        r_max,
        marginal,
    })
}

fn check_tol(rel_tol: f64) -> Result<()> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "relative tolerance must lie in (0, 1), got {rel_tol}"
        )));
    }
    Ok(())
}

fn depth(pot: &Potential, r: f64) -> f64 {
    (-pot.eval(r)).max(0.0)
}

/// Series start `(r0, u(r0), u'(r0))` just off the origin, where both
/// counters enter the ODE. For a `-A/r` origin the Picard iterates give
/// `u = r - A r²/2 + A² r³/12 + ...`; a regular origin is the `A → A·r`
/// limit of the same expansion, and at `r0 = 1e-10` per unit scale either
/// truncation error is far below the integration tolerance.
fn series_start(pot: &Potential, scale: f64) -> (f64, f64, f64) {
    let r0 = 1e-10 * scale;
    let a = r0 * depth(pot, r0);
    let u = r0 * (1.0 - 0.5 * a * r0 + a * a * r0 * r0 / 12.0);
    let du = 1.0 - a * r0 + 0.25 * a * a * r0 * r0;
    (r0, u, du)
}

/// Integration intervals between breakpoints, where the right-hand side
/// is smooth.
fn segments(pot: &Potential, r0: f64, r_max: f64) -> Vec<(f64, f64)> {
    let mut cuts = vec![r0];
    for b in pot.breakpoints() {
        if b > r0 && b < r_max {
            cuts.push(b);
        }
    }
    cuts.push(r_max);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Root of the cubic Hermite interpolant through `(ra, ya)`, `(rb, yb)`
/// (value and slope at both ends), given a sign change of the value.
fn hermite_root(ra: f64, ya: &[f64; 2], rb: f64, yb: &[f64; 2]) -> f64 {
    let h = rb - ra;
    let eval = |t: f64| -> f64 {
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * ya[0]
            + (t3 - 2.0 * t2 + t) * h * ya[1]
            + (-2.0 * t3 + 3.0 * t2) * yb[0]
            + (t3 - t2) * h * yb[1]
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    let positive_lo = ya[0] > 0.0;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let v = eval(mid);
        if v == 0.0 {
            return ra + mid * h;
        }
        if (v > 0.0) == positive_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ra + 0.5 * (lo + hi) * h
}

// Dormand-Prince 5(4) tableau.
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B5: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
// Difference between the 5th- and 4th-order weights (the error estimate);
// the last entry weighs the stage at the step end.
const ERR: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
const C: [f64; 5] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];

/// One embedded step: returns the 5th-order solution and the local error
/// estimate.
fn rk_step<const N: usize, F>(rhs: &F, t: f64, y: &[f64; N], h: f64) -> ([f64; N], [f64; N])
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let advance = |coeffs: &[f64], ks: &[&[f64; N]]| -> [f64; N] {
        let mut ya = *y;
        for (a, k) in coeffs.iter().zip(ks) {
            for i in 0..N {
                ya[i] += h * a * k[i];
            }
        }
        ya
    };
    let k1 = rhs(t, y);
    let k2 = rhs(t + C[0] * h, &advance(&A2, &[&k1]));
    let k3 = rhs(t + C[1] * h, &advance(&A3, &[&k1, &k2]));
    let k4 = rhs(t + C[2] * h, &advance(&A4, &[&k1, &k2, &k3]));
    let k5 = rhs(t + C[3] * h, &advance(&A5, &[&k1, &k2, &k3, &k4]));
    let k6 = rhs(t + C[4] * h, &advance(&A6, &[&k1, &k2, &k3, &k4, &k5]));
    let y5 = advance(&B5, &[&k1, &k2, &k3, &k4, &k5, &k6]);
    let k7 = rhs(t + h, &y5);

    let stages = [&k1, &k2, &k3, &k4, &k5, &k6, &k7];
    let mut err = [0.0; N];
    for (e, k) in ERR.iter().zip(stages) {
        for i in 0..N {
            err[i] += h * e * k[i];
        }
    }
    (y5, err)
}

/// Adaptive Dormand-Prince driver over one smooth segment. `h_cap` bounds
/// the step from the local oscillation rate; `on_step` sees every accepted
/// step and may rescale the state.
fn integrate_segment<const N: usize, F, H>(
    rhs: &F,
    a: f64,
    b: f64,
    y0: [f64; N],
    rel_tol: f64,
    h_cap: &H,
    on_step: &mut dyn FnMut(f64, &[f64; N], f64, &mut [f64; N]),
) -> Result<[f64; N]>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
    H: Fn(f64, &[f64; N]) -> f64,
{
    if b <= a {
        return Ok(y0);
    }
    let mut t = a;
    let mut y = y0;
    let mut h = h_cap(a, &y0).min(b - a) * 0.1;
    for _ in 0..4_000_000 {
        h = h.min(h_cap(t, &y));
        let last = b - t <= h;
        if last {
            h = b - t;
        }
        if !(h > 0.0) || t + h == t {
            // A potential that vanishes continuously at the segment end
            // makes V'/|V| blow up there and drives the step below one ulp
            // just before arrival. The phase has already collapsed onto its
            // limit by then (the remaining change is at most κ · Δr, far
            // below any usable tolerance), so arrival within rounding of
            // the end is success, not a stall.
            if b - t <= 8.0 * f64::EPSILON * b.abs().max(1.0) {
                return Ok(y);
            }
            return Err(Error::OdeStalled {
                context: format!("step size underflow at r = {t}"),
            });
        }
        let (y_new, err) = rk_step(rhs, t, &y, h);
        let norm = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut ratio = 0.0f64;
        for i in 0..N {
            if !y_new[i].is_finite() {
                return Err(Error::OdeStalled {
                    context: format!("state not finite at r = {t}"),
                });
            }
            let scale = rel_tol * (1.0 + y[i].abs().max(y_new[i].abs()).max(norm));
            ratio = ratio.max(err[i].abs() / scale);
        }
        if ratio <= 1.0 {
            let t_new = if last { b } else { t + h };
            let mut y_new = y_new;
            on_step(t, &y, t_new, &mut y_new);
            t = t_new;
            y = y_new;
            if t >= b {
                return Ok(y);
            }
        }
        let factor = if ratio > 0.0 {
            (0.9 * ratio.powf(-0.2)).clamp(0.2, 4.0)
        } else {
            4.0
        };
        h *= factor;
    }
    Err(Error::OdeStalled {
        context: format!("step budget exhausted on [{a}, {b}]"),
    })
}
