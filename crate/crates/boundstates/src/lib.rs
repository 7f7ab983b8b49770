//! How many bound states does a potential hold?
//!
//! For an attractive central potential `V(r)` that is monotonic
//! (nondecreasing, nowhere repulsive force) this crate computes the exact
//! number `N` of S-wave bound states and brackets it with rigorous,
//! cheaply computable upper and lower limits:
//!
//! * **Exact count** — the zeros of the zero-energy radial solution
//!   `u'' = V u`, tracked through a Prüfer phase that cannot miss an
//!   oscillation ([`counter`]).
//! * **Moment limits** — classical integral bounds built from
//!   `∫ r |V| dr`, `∫ |V|^{1/2} dr` and mixed moments
//!   ([`limits::classic`]).
//! * **Phase-style limits** — two-sided bounds `S/π ± O(log)` built from
//!   the half-phase integral `S = ∫ |V|^{1/2} dr` with logarithmic
//!   corrections at auxiliary radii; tight even at strong coupling
//!   ([`limits::phase`]).
//! * **Ladder limits** — integer bounds from half-wavelength rung
//!   recursions `r_{j+1} = r_j + (π/2)|V(r_j)|^{-1/2}`, equivalent to
//!   sandwiching `V` between piecewise-constant comparison wells
//!   ([`limits::ladder`]).
//!
//! Six analytically tractable wells are built in, wells given as `(r, V)`
//! samples are interpolated ([`Potential::from_table`]), and attractive
//! scalar wells of the relativistic (Klein-Gordon) problem reduce to the
//! same machinery via `V = 2mW - W²` ([`Potential::kg_reduce`]).
//!
//! # Quick start
//!
//! ```
//! use boundstates::report::BoundsReport;
//! use boundstates::{Kind, Potential};
//!
//! let pot = Potential::builtin(Kind::Hulthen, 2.5, 1.0, f64::NAN)?;
//! let report = BoundsReport::compute(&pot, 1e-10)?;
//! assert_eq!(report.exact.count, 2);
//!
//! // Every limit the shape admits, already integerized.
//! let (lo, hi) = report.tightest_window();
//! assert!(lo <= 2 && 2 <= hi.unwrap());
//! # Ok::<(), boundstates::Error>(())
//! ```
//!
//! The `nbound` binary exposes the same pipeline on the command line
//! (`bounds`, `sweep`, `table1`, `kg`), and the `examples/` directory
//! walks through each capability.

pub mod analytic;
pub mod config;
pub mod error;
pub mod potential;
pub mod quadrature;
pub mod report;
pub mod counter;
pub mod limits;
pub mod rootfind;

pub use error::{Error, Result};
pub use limits::{Direction, LimitName, LimitValue};
pub use potential::{Diagnostics, Kind, Potential};
