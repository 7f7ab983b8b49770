//! Strong-coupling behaviour of the limits.
//!
//! As the well deepens, the exact count approaches the semiclassical
//! estimate `N ≈ S/π` with `S = ∫|V|^{1/2} dr`, the phase-style limits
//! track it to within a slowly growing logarithm, and the classical
//! half-wave (Calogero-Cohn) upper limit `N ≤ (2/π) S` overshoots by an
//! asymptotic factor of 2.
//!
//! ```text
//! cargo run --release --example strong_coupling
//! ```

use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::report::BoundsReport;
use boundstates::{Kind, LimitName, Potential};

fn main() -> boundstates::Result<()> {
    println!(
        "{:>6} {:>8} {:>10} {:>12} {:>12} {:>12}",
        "g", "N", "N pi/S", "half-wave/N", "phase-up/N", "phase-lo/N"
    );
    for g in [10.0, 30.0, 100.0, 300.0] {
        let pot = Potential::builtin(Kind::PoschlTeller, g, 1.0, f64::NAN)?;
        let rep = BoundsReport::compute(&pot, DEFAULT_REL_TOL)?;
        let n = rep.exact.count as f64;
        let ratio = |name: LimitName| rep.limit(name).unwrap().raw / n;
        println!(
            "{:>6} {:>8} {:>10.5} {:>12.5} {:>12.5} {:>12.5}",
            g,
            rep.exact.count,
            n * std::f64::consts::PI / rep.radii.half_phase,
            ratio(LimitName::HalfWaveUpper),
            ratio(LimitName::PhaseUpper),
            ratio(LimitName::PhaseLowerRegular),
        );
    }
    println!();
    println!("the phase-style window width grows only like ln g, so both");
    println!("phase ratios approach 1 while half-wave/N approaches 2.");
    Ok(())
}
