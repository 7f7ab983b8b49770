//! Bound states of the relativistic (Klein-Gordon) problem with an
//! attractive Lorentz-scalar well `W`, via the exact reduction
//!
//! ```text
//! V(r) = 2m W(r) - W(r)²        (ℏ = c = 1)
//! ```
//!
//! to an equivalent nonrelativistic well. For a deep exponential
//! `W = -g² e^{-r}` the `W²` term dominates, so the count grows like `g²`
//! rather than the nonrelativistic `g` — visible here as a log-log slope
//! approaching 2.
//!
//! ```text
//! cargo run --example klein_gordon
//! ```

use boundstates::counter::count_states;
use boundstates::quadrature::DEFAULT_REL_TOL;
use boundstates::report::BoundsReport;
use boundstates::{Kind, Potential};

fn main() -> boundstates::Result<()> {
    println!("{:>6} {:>8} {:>18}", "g", "N", "ln N slope vs ln g");
    let mut prev: Option<(f64, usize)> = None;
    for g in [4.0, 8.0, 16.0, 32.0] {
        let w = Potential::builtin(Kind::Exponential, g, 1.0, f64::NAN)?;
        let pot = Potential::kg_reduce(w, 1.0)?;
        let n = count_states(&pot, DEFAULT_REL_TOL)?.count;
        let slope = prev
            .map(|(g0, n0)| (n as f64 / n0 as f64).ln() / (g / g0).ln())
            .map_or("-".to_string(), |s| format!("{s:.3}"));
        println!("{g:>6} {n:>8} {slope:>18}");
        prev = Some((g, n));
    }

    // The reduced well runs through the same report machinery as any
    // other potential — limits included.
    let w = Potential::builtin(Kind::Exponential, 8.0, 1.0, f64::NAN)?;
    let rep = BoundsReport::compute(&Potential::kg_reduce(w, 1.0)?, DEFAULT_REL_TOL)?;
    let (lo, hi) = rep.tightest_window();
    println!();
    println!(
        "g = 8: exact {} bracketed by [{}, {}]",
        rep.exact.count,
        lo,
        hi.map_or("inf".to_string(), |h| h.to_string())
    );
    Ok(())
}
