//! Anatomy of the half-wave ladder bounds.
//!
//! Both ladders place rungs a half wavelength of the local depth apart,
//!
//! ```text
//! r_{j+1} = r_j + (π/2) |V(r_j)|^{-1/2},
//! ```
//!
//! the upward one climbing from the origin, the downward one descending
//! from the outer half-wave radius q. Because the potential is monotonic,
//! the piecewise-constant comparison wells they induce bracket V, and the
//! rung count J turns into integer bounds on the state count.
//!
//! ```text
//! cargo run --example ladder_trace
//! ```

use boundstates::limits::ladder::{ladder_lower, ladder_upper};
use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::rootfind::AuxiliaryRadii;
use boundstates::{Kind, Potential};

fn main() -> boundstates::Result<()> {
    let pot = Potential::builtin(Kind::SquareWell, 10.0, 1.0, f64::NAN)?;
    let radii = AuxiliaryRadii::compute(&pot, DEFAULT_REL_TOL)?;
    println!("square well, g = 10: outer half-wave radius q = {:.6}", radii.q.unwrap());

    for (label, result) in [
        ("upward  (upper bound)", ladder_upper(&pot, &radii)?),
        ("downward (lower bound)", ladder_lower(&pot, &radii)?),
    ] {
        let trace = result.trace.expect("well above one-state threshold");
        let rungs: Vec<String> = trace.radii.iter().map(|r| format!("{r:.4}")).collect();
        println!();
        println!("{label}: J = {}, bound = {}", trace.rungs, result.value.bound);
        println!("  rungs: {}", rungs.join(" "));
        println!("  comparison steps (lo, hi, depth):");
        for (lo, hi, v) in trace.segments(&pot) {
            println!("    [{lo:.4}, {hi:.4}] -> {v:.4}");
        }
    }

    // For the square well the rungs are exactly equidistant: the local
    // half wavelength is (pi/2)/g everywhere inside the well.
    println!();
    println!("half wavelength inside the well: {:.6}", std::f64::consts::FRAC_PI_2 / 10.0);
    Ok(())
}
