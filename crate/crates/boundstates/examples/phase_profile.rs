//! How the exact count is obtained: the zero-energy radial solution is
//! tracked through its Prüfer phase
//!
//! ```text
//! θ'(r) = |V(r)|^{1/2} - (V'(r) / 4|V(r)|) sin 2θ,    θ(0) = 0,
//! ```
//!
//! and the number of bound states is the number of multiples of π the
//! phase accumulates. This example prints the phase profile and the radii
//! of the wavefunction nodes for a Pöschl-Teller well.
//!
//! ```text
//! cargo run --example phase_profile
//! ```

use boundstates::counter::{node_positions, phase_profile};
use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::{Kind, Potential};

fn main() -> boundstates::Result<()> {
    let pot = Potential::builtin(Kind::PoschlTeller, 10.0, 1.0, f64::NAN)?;

    let (result, profile) = phase_profile(&pot, DEFAULT_REL_TOL)?;
    println!(
        "g = 10: N = {} states, total phase = {:.6} pi over r in [0, {:.2}]",
        result.count,
        result.phase / std::f64::consts::PI,
        result.r_max
    );

    println!();
    println!("{:>10} {:>12}", "r", "theta/pi");
    let stride = (profile.len() / 12).max(1);
    for (r, theta) in profile.iter().step_by(stride) {
        println!("{:>10.4} {:>12.6}", r, theta / std::f64::consts::PI);
    }

    let trace = node_positions(&pot, DEFAULT_REL_TOL)?;
    println!();
    println!(
        "node radii of the zero-energy solution: {}",
        trace
            .nodes
            .iter()
            .map(|r| format!("{r:.4}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    if trace.tail_node {
        println!("(one more node lies beyond the integration horizon)");
    }
    Ok(())
}
