//! Phase-integral bounds with logarithmic depth-ratio corrections.
//!
//! With `κ = |V|^(1/2)`, `S = ∫₀^∞ κ dr`, and the half-wave radii `p`, `q`
//! from [`AuxiliaryRadii`], the implemented bounds are
//!
//! ```text
//! upper              : N ≤ S/π + (1/4π) ln(|V(p)|/|V(q)|) + 1/2
//! upper (regular)    : N ≤ S/π + (1/4π) ln(|V(0)|/|V(q)|) + 1/2
//! lower (regular)    : N > S/π − (1/4π) ln(|V(0)|/|V(q)|) − 1
//! lower (stationary) : N > (1/π) ∫₀^s κ dr − (1/4π) ln(|V(0)|/|V(s)|) − 1/2
//! lower (singular)   : N ≥ S/π − (1/4π) ln(|V(p)|/|V(q)|) − 3/2
//! lower (window)     : N > (1/π) ∫_t^s κ dr − (1/4π) ln(|V(p)|/|V(s)|)
//!                      N > (1/π) ∫_t^∞ κ dr − (1/4π) ln(|V(p)|/|V(q)|) − 1/2
//! ```
//!
//! The `regular` variants anchor the depth ratio at `|V(0)|` and reject
//! potentials singular at the origin. The stationary bound holds at any
//! radius `s` where `V'(s) = 4|V(s)|^(3/2)`; at the edge of a finite
//! support, where the depth jumps to zero (the slope condition holds in the
//! limiting sense); and at `s = q`, where it reduces to the regular lower
//! bound. The window bound cuts away the origin below the fixed point `t` of
//! `t = ∫₀^t r²|V| dr` and holds for any stationary `s ≥ t` (first form) or
//! for `s = q ≥ t` (second form). Solvers evaluate every admissible
//! candidate and keep the sharpest.
//!
//! A potential with `S < π/2` supports no bound state at all; every bound
//! here then short-circuits to the exact statement `N = 0`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::limits::{LimitName, LimitValue};
use crate::potential::Potential;
use crate::quadrature::{integrate, IntegralSpec, MomentKind};
use crate::rootfind::AuxiliaryRadii;

/// `N ≤ S/π + (1/4π) ln(|V(p)|/|V(q)|) + 1/2`.
pub fn phase_upper(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LimitValue> {
    let name = LimitName::PhaseUpper;
    let (Some(p), Some(q)) = (radii.p, radii.q) else {
        return Ok(trivial(name));
    };
    let raw = radii.half_phase / PI + log_ratio(pot, p, q) / (4.0 * PI) + 0.5;
    Ok(LimitValue::new(name, raw))
}

/// `N ≤ S/π + (1/4π) ln(|V(0)|/|V(q)|) + 1/2`; regular potentials only.
pub fn phase_upper_regular(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LimitValue> {
    let name = LimitName::PhaseUpperRegular;
    reject_singular(pot, "origin-anchored phase upper bound")?;
    let Some(q) = radii.q else {
        return Ok(trivial(name));
    };
    let raw = radii.half_phase / PI + log_ratio(pot, 0.0, q) / (4.0 * PI) + 0.5;
    Ok(LimitValue::new(name, raw))
}

/// `N > S/π − (1/4π) ln(|V(0)|/|V(q)|) − 1`; regular potentials only.
pub fn phase_lower_regular(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LimitValue> {
    let name = LimitName::PhaseLowerRegular;
    reject_singular(pot, "origin-anchored phase lower bound")?;
    let Some(q) = radii.q else {
        return Ok(trivial(name));
    };
    let raw = radii.half_phase / PI - log_ratio(pot, 0.0, q) / (4.0 * PI) - 1.0;
    Ok(LimitValue::new(name, raw))
}

/// `N > (1/π) ∫₀^s κ dr − (1/4π) ln(|V(0)|/|V(s)|) − 1/2`, maximized over
/// the admissible radii `s`; regular potentials only.
///
/// Candidates are every stationary root of `V'(s) = 4|V(s)|^(3/2)`, the edge
/// of a finite support, and the outer half-wave radius `q` (at which the
/// bound coincides with the plain regular lower bound).
pub fn phase_lower_stationary(
    pot: &Potential,
    radii: &AuxiliaryRadii,
    rel_tol: f64,
) -> Result<LimitValue> {
    let name = LimitName::PhaseLowerStationary;
    reject_singular(pot, "origin-anchored phase lower bound")?;
    let Some(q) = radii.q else {
        return Ok(trivial(name));
    };
    let mut candidates = radii.s_roots.clone();
    if let Some(end) = pot.support_end() {
        candidates.push(end);
    }
    candidates.push(q);
    let mut best = f64::NEG_INFINITY;
    for s in candidates {
        if pot.eval(s).abs() <= 0.0 {
            continue;
        }
        let head = integrate(pot, IntegralSpec::over(MomentKind::SqrtAbsV, 0.0, s), rel_tol)?;
        let value = head / PI - log_ratio(pot, 0.0, s) / (4.0 * PI) - 0.5;
        best = best.max(value);
    }
    Ok(LimitValue::new(name, best))
}

/// `N ≥ S/π − (1/4π) ln(|V(p)|/|V(q)|) − 3/2`; tolerates a singular origin.
///
/// The correction term presumes the inner half-wave window ends before the
/// outer one begins (`p ≤ q`); a well barely above the half-wave threshold
/// has them crossed and only admits the vacuous statement `N ≥ 0`.
pub fn phase_lower_singular(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LimitValue> {
    let name = LimitName::PhaseLowerSingular;
    let (Some(p), Some(q)) = (radii.p, radii.q) else {
        return Ok(trivial(name));
    };
    if p > q {
        return Ok(trivial(name));
    }
    let raw = radii.half_phase / PI - log_ratio(pot, p, q) / (4.0 * PI) - 1.5;
    Ok(LimitValue::new(name, raw))
}

/// Window lower bound over `[t, s]`, maximized over the admissible `s`;
/// tolerates a singular origin.
///
/// Needs the fixed point `t` of `t = ∫₀^t r²|V| dr` to exist. Candidates
/// for `s` are the stationary roots at or beyond `t` (bound without
/// constant) and the outer radius `q` when `q ≥ t` (bound with `−1/2`).
pub fn phase_lower_window(
    pot: &Potential,
    radii: &AuxiliaryRadii,
    rel_tol: f64,
) -> Result<LimitValue> {
    let name = LimitName::PhaseLowerWindow;
    let (Some(p), Some(q)) = (radii.p, radii.q) else {
        return Ok(trivial(name));
    };
    if p > q {
        return Ok(trivial(name));
    }
    let Some(t) = radii.t else {
        return Err(Error::Unsupported(
            "window lower bound needs the r²-moment fixed point to exist".into(),
        ));
    };
    let mut best = f64::NEG_INFINITY;
    for &s in radii.s_roots.iter().filter(|&&s| s >= t) {
        if pot.eval(s).abs() <= 0.0 {
            continue;
        }
        let mid = integrate(pot, IntegralSpec::over(MomentKind::SqrtAbsV, t, s), rel_tol)?;
        best = best.max(mid / PI - log_ratio(pot, p, s) / (4.0 * PI));
    }
    if q >= t {
        let tail = integrate(
            pot,
            IntegralSpec::over(MomentKind::SqrtAbsV, t, f64::INFINITY),
            rel_tol,
        )?;
        best = best.max(tail / PI - log_ratio(pot, p, q) / (4.0 * PI) - 0.5);
    }
    if best == f64::NEG_INFINITY {
        return Err(Error::Unsupported(
            "window lower bound has no admissible radius at or beyond t".into(),
        ));
    }
    Ok(LimitValue::new(name, best))
}

/// `ln(|V(a)| / |V(b)|)`.
fn log_ratio(pot: &Potential, a: f64, b: f64) -> f64 {
    (pot.eval(a).abs() / pot.eval(b).abs()).ln()
}

/// The exact statement `N = 0` for potentials below the half-wave threshold.
fn trivial(name: LimitName) -> LimitValue {
    LimitValue {
        name,
        raw: 0.0,
        bound: 0,
        marginal: false,
    }
}

fn reject_singular(pot: &Potential, what: &str) -> Result<()> {
    if pot.origin_singular() {
        return Err(Error::Unsupported(format!(
            "{what} needs a finite |V(0)|"
        )));
    }
    Ok(())
}
