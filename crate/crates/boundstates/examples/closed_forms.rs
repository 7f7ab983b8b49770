//! Cross-check: for the built-in wells, most limits evaluate in closed
//! form. This example recomputes every limit numerically (quadrature +
//! root finding) and prints the relative deviation from the analytic
//! expression — a judge of the numeric pipeline with no tunable knobs.
//!
//! ```text
//! cargo run --example closed_forms
//! ```

use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::report::BoundsReport;
use boundstates::{analytic, Kind, Potential};

fn main() -> boundstates::Result<()> {
    for (kind, g, alpha) in [
        (Kind::PoschlTeller, 10.0, f64::NAN),
        (Kind::Hulthen, 2.5, f64::NAN),
        (Kind::Exponential, 10.0, f64::NAN),
        (Kind::Yukawa, 10.0, f64::NAN),
        (Kind::InverseSquare, 10.0, 1.0),
    ] {
        let pot = Potential::builtin(kind, g, 1.0, alpha)?;
        let rep = BoundsReport::compute(&pot, DEFAULT_REL_TOL)?;
        println!("{} (g = {g}):", kind.name());
        println!(
            "  {:<24} {:>16} {:>16} {:>10}",
            "limit", "numeric raw", "closed form", "rel dev"
        );
        for v in &rep.limits {
            let Some(exact) = analytic::closed_form(kind, v.name, g, alpha) else {
                continue;
            };
            let dev = (v.raw - exact).abs() / exact.abs().max(1.0);
            println!(
                "  {:<24} {:>16.10} {:>16.10} {:>10.2e}",
                v.name.label(),
                v.raw,
                exact,
                dev
            );
        }
        println!();
    }
    Ok(())
}
