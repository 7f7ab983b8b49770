//! Half-wave ladder bounds.
//!
//! Each rung of the ladder spans exactly half a wavelength of the local
//! depth. Stepping outward from the origin,
//!
//! ```text
//! r_{j+1} = r_j + (π/2) |V(r_j)|^(-1/2),   r_0 = 0,
//! ```
//!
//! and with `J⁺` the last index for which `r_j` stays below the outer
//! half-wave radius `q`,
//!
//! ```text
//! N ≤ ⌊(J⁺ + 1)/2⌋ + 1.
//! ```
//!
//! Stepping inward from `q`,
//!
//! ```text
//! r_{j+1} = r_j − (π/2) |V(r_j)|^(-1/2),   r_0 = q,
//! ```
//!
//! and with `J⁻` the last index for which `r_j` stays positive,
//!
//! ```text
//! N ≥ ⌊J⁻/2⌋.
//! ```
//!
//! The upward ladder freezes the depth at the left end of every rung, which
//! replaces `V` by a piecewise-constant minorant (deeper everywhere, so it
//! holds at least as many states); the downward ladder freezes the right
//! end, giving a majorant. [`LadderTrace::segments`] reconstructs these
//! comparison potentials for inspection. The upward ladder starts at the
//! origin and therefore needs a finite `|V(0)|`; the downward ladder also
//! works for potentials singular at the origin, where the shrinking steps
//! still reach zero in finitely many rungs for any origin behavior milder
//! than `1/r²`.
//!
//! A potential with `S < π/2` supports no bound state; both ladders then
//! short-circuit to the exact statement `N = 0` without a trace.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::limits::{Direction, LimitName, LimitValue};
use crate::potential::Potential;
use crate::rootfind::AuxiliaryRadii;

/// Safety cap on the rung count; reached only for origin behavior at or
/// beyond `1/r²`, where the downward recursion contracts geometrically and
/// never closes.
const MAX_RUNGS: usize = 4_000_000;

/// A ladder bound together with the rungs that produced it.
#[derive(Clone, Debug)]
pub struct LadderBound {
    /// The integer bound.
    pub value: LimitValue,
    /// The rungs; `None` below the one-state threshold.
    pub trace: Option<LadderTrace>,
}

/// The rung radii of one ladder run.
#[derive(Clone, Debug)]
pub struct LadderTrace {
    /// Every rung, in recursion order: upward traces ascend from `0`,
    /// downward traces descend from `q`. The terminal rung is the first one
    /// past `q` (upward) or at or below zero (downward).
    pub radii: Vec<f64>,
    /// Outer half-wave radius the ladder closes against.
    pub q: f64,
    /// `J`: index of the last rung strictly inside the admissible region.
    pub rungs: usize,
    /// Which bound this trace supports.
    pub direction: Direction,
}

impl LadderTrace {
    /// The piecewise-constant comparison potential as `(lo, hi, value)`
    /// segments: a minorant of `V` for upward traces, a majorant for
    /// downward traces (whose innermost segment is clipped at `r = 0`).
    pub fn segments(&self, pot: &Potential) -> Vec<(f64, f64, f64)> {
        self.radii
            .windows(2)
            .map(|pair| match self.direction {
                Direction::Upper => (pair[0], pair[1], pot.eval(pair[0])),
                Direction::Lower => (pair[1].max(0.0), pair[0], pot.eval(pair[0])),
            })
            .collect()
    }
}

/// `N ≤ ⌊(J⁺ + 1)/2⌋ + 1` from the upward ladder; regular potentials only.
pub fn ladder_upper(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LadderBound> {
    let name = LimitName::LadderUpper;
    if pot.origin_singular() {
        return Err(Error::Unsupported(
            "upward ladder starts at the origin and needs a finite |V(0)|".into(),
        ));
    }
    let Some(q) = radii.q else {
        return Ok(trivial(name));
    };
    let mut rungs = vec![0.0_f64];
    loop {
        let r = *rungs.last().expect("ladder starts with one rung");
        if r >= q {
            break;
        }
        if rungs.len() > MAX_RUNGS {
            return Err(Error::LadderStalled { rungs: rungs.len() });
        }
        let depth = pot.eval(r).abs();
        rungs.push(r + FRAC_PI_2 / depth.sqrt());
    }
    // A threshold well (attraction integral exactly π/2) has q at the
    // origin and the ladder closes before laying a single rung.
    let j = rungs.len().saturating_sub(2);
    Ok(bound_with_trace(name, (j + 1) / 2 + 1, rungs, q, j, Direction::Upper))
}

/// `N ≥ ⌊J⁻/2⌋` from the downward ladder; tolerates a singular origin.
pub fn ladder_lower(pot: &Potential, radii: &AuxiliaryRadii) -> Result<LadderBound> {
    let name = LimitName::LadderLower;
    let Some(q) = radii.q else {
        return Ok(trivial(name));
    };
    let mut rungs = vec![q];
    loop {
        let r = *rungs.last().expect("ladder starts with one rung");
        if r <= 0.0 || !r.is_finite() {
            break;
        }
        if rungs.len() > MAX_RUNGS {
            return Err(Error::LadderStalled { rungs: rungs.len() });
        }
        let depth = pot.eval(r).abs();
        rungs.push(r - FRAC_PI_2 / depth.sqrt());
    }
    let j = rungs.len().saturating_sub(2);
    Ok(bound_with_trace(name, j / 2, rungs, q, j, Direction::Lower))
}

fn bound_with_trace(
    name: LimitName,
    bound: usize,
    radii: Vec<f64>,
    q: f64,
    rungs: usize,
    direction: Direction,
) -> LadderBound {
    LadderBound {
        value: LimitValue {
            name,
            raw: bound as f64,
            bound,
            marginal: false,
        },
        trace: Some(LadderTrace {
            radii,
            q,
            rungs,
            direction,
        }),
    }
}

/// The exact statement `N = 0` for potentials below the half-wave threshold.
fn trivial(name: LimitName) -> LadderBound {
    LadderBound {
        value: LimitValue {
            name,
            raw: 0.0,
            bound: 0,
            marginal: false,
        },
        trace: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counter::count_states;
    use crate::potential::Kind;
    use crate::quadrature::DEFAULT_REL_TOL;
    use approx::assert_relative_eq;

    const TOL: f64 = DEFAULT_REL_TOL;

    fn builtin(kind: Kind, g: f64) -> Potential {
        Potential::builtin(kind, g, 1.0, f64::NAN).unwrap()
    }

    fn radii(pot: &Potential) -> AuxiliaryRadii {
        AuxiliaryRadii::compute(pot, TOL).unwrap()
    }

    #[test]
    fn square_well_rungs_are_uniform() {
        // Constant depth g/R makes every step π R/(2g); with q = R(1 − π/2g)
        // the last rung below q has index 5 at g = 10.
        let pot = builtin(Kind::SquareWell, 10.0);
        let radii = radii(&pot);
        let up = ladder_upper(&pot, &radii).unwrap();
        let trace = up.trace.unwrap();
        assert_eq!(trace.rungs, 5);
        for (j, r) in trace.radii.iter().enumerate() {
            assert_relative_eq!(*r, j as f64 * PI_STEP, max_relative = 1e-9);
        }
        assert_eq!(up.value.bound, 4);
        let down = ladder_lower(&pot, &radii).unwrap();
        assert_eq!(down.trace.unwrap().rungs, 5);
        assert_eq!(down.value.bound, 2);
    }

    const PI_STEP: f64 = FRAC_PI_2 / 10.0;

    #[test]
    fn square_well_bounds_match_half_wave_arithmetic() {
        // Uniform rungs make both bounds explicit in ν = g/π + 1/2: the
        // upward bound is ⌊ν + 1/2⌋ and the downward bound ⌊ν − 1⌋.
        for g in [2.0, 3.7, 9.3, 25.0, 60.0] {
            let pot = builtin(Kind::SquareWell, g);
            let radii = radii(&pot);
            let nu = g / std::f64::consts::PI + 0.5;
            let up = ladder_upper(&pot, &radii).unwrap();
            assert_eq!(up.value.bound, (nu + 0.5).floor() as usize, "g = {g}");
            let down = ladder_lower(&pot, &radii).unwrap();
            assert_eq!(down.value.bound, (nu - 1.0).floor() as usize, "g = {g}");
        }
    }

    #[test]
    fn inverse_square_ladder_is_geometric() {
        // With depth g²/(R+r)² each step multiplies R + r by 1 + π/(2g),
        // so the rungs are exactly geometric.
        let pot = Potential::builtin(Kind::InverseSquare, 10.0, 1.0, 1.0).unwrap();
        let radii = radii(&pot);
        let up = ladder_upper(&pot, &radii).unwrap();
        let trace = up.trace.unwrap();
        let ratio = 1.0 + FRAC_PI_2 / 10.0;
        for (j, r) in trace.radii.iter().enumerate() {
            assert_relative_eq!(1.0 + r, ratio.powi(j as i32), max_relative = 1e-9);
        }
        assert_eq!(trace.rungs, 3);
        assert_eq!(up.value.bound, 3);
        let down = ladder_lower(&pot, &radii).unwrap();
        assert_eq!(down.value.bound, 1);
    }

    #[test]
    fn hulthen_rejects_upward_but_steps_down() {
        let pot = builtin(Kind::Hulthen, 2.5);
        let radii = radii(&pot);
        assert!(matches!(
            ladder_upper(&pot, &radii),
            Err(Error::Unsupported(_))
        ));
        // By hand: r₀ = q ≈ 2.3481, r₁ ≈ 0.4151, r₂ < 0, so J⁻ = 1.
        let down = ladder_lower(&pot, &radii).unwrap();
        let trace = down.trace.unwrap();
        assert_eq!(trace.rungs, 1);
        assert_eq!(down.value.bound, 0);
    }

    #[test]
    fn traces_close_against_their_boundaries() {
        for (kind, g, alpha) in [
            (Kind::PoschlTeller, 7.0, f64::NAN),
            (Kind::Exponential, 12.0, f64::NAN),
            (Kind::InverseSquare, 25.0, 3.0),
        ] {
            let pot = Potential::builtin(kind, g, 1.0, alpha).unwrap();
            let radii = radii(&pot);
            let up = ladder_upper(&pot, &radii).unwrap().trace.unwrap();
            let (last, interior) = up.radii.split_last().unwrap();
            assert!(*last >= up.q);
            assert!(interior.iter().all(|r| *r < up.q));
            let down = ladder_lower(&pot, &radii).unwrap().trace.unwrap();
            let (last, interior) = down.radii.split_last().unwrap();
            assert!(*last <= 0.0);
            assert!(interior.iter().all(|r| *r > 0.0));
        }
    }

    #[test]
    fn upward_segments_minorize_and_downward_segments_majorize() {
        let pot = builtin(Kind::PoschlTeller, 10.0);
        let radii = radii(&pot);
        let up = ladder_upper(&pot, &radii).unwrap().trace.unwrap();
        for (lo, hi, value) in up.segments(&pot) {
            for k in 0..5 {
                let r = lo + (hi - lo) * k as f64 / 4.0;
                assert!(value <= pot.eval(r) + 1e-12);
            }
        }
        let down = ladder_lower(&pot, &radii).unwrap().trace.unwrap();
        for (lo, hi, value) in down.segments(&pot) {
            for k in 1..=5 {
                let r = lo + (hi - lo) * k as f64 / 5.0;
                assert!(value >= pot.eval(r) - 1e-12);
            }
        }
    }

    #[test]
    fn ladder_bounds_bracket_the_exact_count() {
        for (kind, g, alpha) in [
            (Kind::SquareWell, 5.0, f64::NAN),
            (Kind::PoschlTeller, 8.0, f64::NAN),
            (Kind::Exponential, 6.0, f64::NAN),
            (Kind::InverseSquare, 10.0, 100.0),
            (Kind::Hulthen, 4.5, f64::NAN),
            (Kind::Yukawa, 7.0, f64::NAN),
        ] {
            let pot = Potential::builtin(kind, g, 1.0, alpha).unwrap();
            let radii = radii(&pot);
            let n = count_states(&pot, 1e-12).unwrap().count;
            let down = ladder_lower(&pot, &radii).unwrap();
            assert!(
                down.value.admits(n),
                "{kind:?} g={g}: lower {} vs count {n}",
                down.value.bound
            );
            if !pot.origin_singular() {
                let up = ladder_upper(&pot, &radii).unwrap();
                assert!(
                    up.value.admits(n),
                    "{kind:?} g={g}: upper {} vs count {n}",
                    up.value.bound
                );
            }
        }
    }

    #[test]
    fn below_threshold_short_circuits_without_a_trace() {
        let pot = builtin(Kind::SquareWell, 1.0);
        let radii = radii(&pot);
        let up = ladder_upper(&pot, &radii).unwrap();
        assert_eq!(up.value.bound, 0);
        assert!(up.trace.is_none());
        let down = ladder_lower(&pot, &radii).unwrap();
        assert_eq!(down.value.bound, 0);
        assert!(down.trace.is_none());
    }
}
