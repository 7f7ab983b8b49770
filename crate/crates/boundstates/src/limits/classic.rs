//! Moment-integral bounds and one-state sufficient conditions.
//!
//! With `|V|` the depth of an attractive monotonic potential and
//! `κ = |V|^(1/2)`, the implemented bounds are
//!
//! ```text
//! N ≤ ∫₀^∞ r |V(r)| dr                          (moment upper)
//! N ≤ (2/π) ∫₀^∞ |V(r)|^(1/2) dr                (half-wave upper)
//! N ≤ [∫₀^∞ r²|V| dr · ∫₀^∞ |V| dr]^(1/4)       (mixed-moment upper)
//! N ≥ (2/π) ρ |V(ρ)|^(1/2) − 1/2                (tail-balance lower)
//! N ≥ (1/π) ∫₀^∞ |V| dr / |V(0)|^(1/2) − 1/2    (depth-scaled lower)
//! ```
//!
//! where `ρ` solves `ρ|V(ρ)| = ∫_ρ^∞ |V| dr`. The mixed-moment bound needs
//! `∫ |V|` to converge at the origin and the depth-scaled bound needs a
//! finite `|V(0)|`; both reject potentials singular at the origin.
//!
//! Setting `N = 1` in the lower bounds yields conditions that are
//! *sufficient* for the potential to support at least one bound state;
//! [`OneStateCheck`] evaluates them together with the two scale-optimized
//! conditions
//!
//! ```text
//! (1/a) ∫₀^a r²|V| dr + a ∫_a^∞ |V| dr > 1     at the split scale a*
//! a ∫₀^∞ |V| / (1 + a²|V|) dr > 1              at the saturation scale a°
//! ```
//!
//! evaluated at the stationary scales from
//! [`AuxiliaryRadii`](crate::rootfind::AuxiliaryRadii).

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::limits::{LimitName, LimitValue};
use crate::potential::Potential;
use crate::quadrature::{integrate, IntegralSpec, MomentKind};
use crate::rootfind::{rational_condition, split_condition, AuxiliaryRadii};

/// Threshold of `ρ|V(ρ)|^(1/2)` above which one bound state is certain.
pub const TAIL_BALANCE_THRESHOLD: f64 = 3.0 * PI / 4.0;

/// Threshold of `∫|V| dr / |V(0)|^(1/2)` above which one bound state is
/// certain.
pub const DEPTH_SCALED_THRESHOLD: f64 = 3.0 * PI / 2.0;

/// `N ≤ ∫ r |V| dr`.
pub fn moment_upper(pot: &Potential, rel_tol: f64) -> Result<LimitValue> {
    let raw = integrate(pot, IntegralSpec::full(MomentKind::RAbsV), rel_tol)?;
    Ok(LimitValue::new(LimitName::MomentUpper, raw))
}

/// `N ≤ (2/π) ∫ |V|^(1/2) dr`.
pub fn half_wave_upper(pot: &Potential, rel_tol: f64) -> Result<LimitValue> {
    let phase = integrate(pot, IntegralSpec::full(MomentKind::SqrtAbsV), rel_tol)?;
    Ok(LimitValue::new(LimitName::HalfWaveUpper, phase / FRAC_PI_2))
}

/// `N ≤ [∫ r²|V| dr · ∫ |V| dr]^(1/4)`.
///
/// Rejects potentials whose depth is not integrable at the origin, for which
/// the second factor diverges and the bound is vacuous.
pub fn mixed_moment_upper(pot: &Potential, rel_tol: f64) -> Result<LimitValue> {
    if !pot.abs_integrable_at_origin() {
        return Err(Error::Unsupported(
            "mixed-moment upper bound needs ∫|V| dr to converge at the origin".into(),
        ));
    }
    let second = integrate(pot, IntegralSpec::full(MomentKind::R2AbsV), rel_tol)?;
    let zeroth = integrate(pot, IntegralSpec::full(MomentKind::AbsV), rel_tol)?;
    Ok(LimitValue::new(
        LimitName::MixedMomentUpper,
        (second * zeroth).powf(0.25),
    ))
}

/// `N ≥ (2/π) ρ |V(ρ)|^(1/2) − 1/2` at the tail-balance radius `ρ`.
pub fn tail_balance_lower(pot: &Potential, radii: &AuxiliaryRadii) -> LimitValue {
    let kappa = pot.eval(radii.rho).abs().sqrt();
    LimitValue::new(
        LimitName::TailBalanceLower,
        radii.rho * kappa / FRAC_PI_2 - 0.5,
    )
}

/// `N ≥ (1/π) ∫ |V| dr / |V(0)|^(1/2) − 1/2`.
///
/// Rejects potentials singular at the origin, where `|V(0)|` diverges and
/// the bound degenerates to the trivial `N ≥ −1/2`.
pub fn depth_scaled_lower(pot: &Potential, rel_tol: f64) -> Result<LimitValue> {
    if pot.origin_singular() {
        return Err(Error::Unsupported(
            "depth-scaled lower bound needs a finite |V(0)|".into(),
        ));
    }
    let zeroth = integrate(pot, IntegralSpec::full(MomentKind::AbsV), rel_tol)?;
    let depth0 = pot.eval(0.0).abs().sqrt();
    Ok(LimitValue::new(
        LimitName::DepthScaledLower,
        zeroth / (PI * depth0) - 0.5,
    ))
}

/// The four sufficient conditions for at least one bound state.
///
/// Each field holds the left-hand side of its condition; the associated
/// method compares it against the threshold. The conditions are sufficient
/// but not necessary: a potential can hold a state while certifying none of
/// them.
#[derive(Clone, Copy, Debug)]
pub struct OneStateCheck {
    /// `ρ|V(ρ)|^(1/2)`; sufficient above `3π/4`.
    pub tail_balance: f64,
    /// `∫|V| dr / |V(0)|^(1/2)`; sufficient above `3π/2`. `None` when the
    /// origin is singular.
    pub depth_scaled: Option<f64>,
    /// Split condition at the balancing scale `a*`; sufficient above 1.
    pub split_moment: f64,
    /// Saturated-depth condition at the stationary scale `a°`; sufficient
    /// above 1.
    pub saturated_moment: f64,
}

impl OneStateCheck {
    /// Evaluates all four conditions at the precomputed radii and scales.
    pub fn compute(pot: &Potential, radii: &AuxiliaryRadii, rel_tol: f64) -> Result<OneStateCheck> {
        let depth_scaled = if pot.origin_singular() {
            None
        } else {
            let zeroth = integrate(pot, IntegralSpec::full(MomentKind::AbsV), rel_tol)?;
            Some(zeroth / pot.eval(0.0).abs().sqrt())
        };
        Ok(OneStateCheck {
            tail_balance: radii.rho * pot.eval(radii.rho).abs().sqrt(),
            depth_scaled,
            split_moment: split_condition(pot, radii.a_split, rel_tol)?,
            saturated_moment: rational_condition(pot, radii.a_rational, rel_tol)?,
        })
    }

    /// `ρ|V(ρ)|^(1/2) > 3π/4`.
    pub fn tail_balance_sufficient(&self) -> bool {
        self.tail_balance > TAIL_BALANCE_THRESHOLD
    }

    /// `∫|V| dr > (3π/2) |V(0)|^(1/2)`.
    pub fn depth_scaled_sufficient(&self) -> bool {
        self.depth_scaled.is_some_and(|v| v > DEPTH_SCALED_THRESHOLD)
    }

    /// Split condition above 1 at the balancing scale.
    pub fn split_sufficient(&self) -> bool {
        self.split_moment > 1.0
    }

    /// Saturated-depth condition above 1 at the stationary scale.
    pub fn saturated_sufficient(&self) -> bool {
        self.saturated_moment > 1.0
    }

    /// True when any condition certifies a bound state.
    pub fn certifies(&self) -> bool {
        self.tail_balance_sufficient()
            || self.depth_scaled_sufficient()
            || self.split_sufficient()
            || self.saturated_sufficient()
    }
}
