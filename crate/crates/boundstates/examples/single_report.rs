//! Full report for a single well: the exact S-wave bound-state count,
//! every applicable upper and lower limit, and the one-state checks.
//!
//! ```text
//! cargo run --example single_report
//! ```

use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::report::{self, BoundsReport, OutputFormat};
use boundstates::{Kind, Potential};

fn main() -> boundstates::Result<()> {
    // A Hulthén well deep enough for two bound states. The shape is
    // singular like -1/r at the origin, so the report will mark the
    // origin-anchored limits as not applicable.
    let pot = Potential::builtin(Kind::Hulthen, 2.5, 1.0, f64::NAN)?;
    let rep = BoundsReport::compute(&pot, DEFAULT_REL_TOL)?;

    print!("{}", report::render_report(&rep, OutputFormat::Table));

    // Every ingredient of the report is public. The tightest window is the
    // best lower/upper pair; the auxiliary radii are the geometry behind
    // the phase-style limits.
    let (lo, hi) = rep.tightest_window();
    println!();
    println!(
        "window from the best limits: {} <= N <= {}",
        lo,
        hi.map_or("inf".to_string(), |h| h.to_string())
    );
    println!(
        "half-phase S/pi = {:.6}, inner half-wave radius p = {:.6}, outer q = {:.6}",
        rep.radii.half_phase / std::f64::consts::PI,
        rep.radii.p.unwrap(),
        rep.radii.q.unwrap(),
    );
    println!(
        "computed in {:.1?} (counting) + {:.1?} (limits)",
        rep.timings.0, rep.timings.1
    );
    Ok(())
}
