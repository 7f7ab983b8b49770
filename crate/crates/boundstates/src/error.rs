//! Crate-wide error type.
//!
//! Every fallible operation in the library reports through [`Error`]; the
//! CLI maps `InvalidParameter`/`BadSamples`/`Config` onto exit code 2 and
//! internal consistency failures onto exit code 3.

use std::fmt;

/// Errors produced while constructing potentials or running the numeric
/// pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A constructor argument is out of range (nonpositive coupling,
    /// nonfinite radius, ...).
    InvalidParameter(String),
    /// A tabulated sample list violates the admissibility rules.
    BadSamples {
        /// Index of the offending sample.
        index: usize,
        /// What went wrong at that sample.
        message: String,
    },
    /// The potential diverges at the origin, so the requested pointwise
    /// evaluation at `r = 0` is undefined.
    SingularAtOrigin,
    /// The radial derivative was requested exactly at a jump radius.
    DerivativeAtJump { r: f64 },
    /// A root solve could not bracket a sign change.
    NoBracket { context: String },
    /// The attraction integral `∫|V|^(1/2) dr` is below `π/2`, so the
    /// potential supports no bound state and the auxiliary radii used by
    /// the refined limits do not exist.
    BelowOneStateThreshold { total: f64 },
    /// Adaptive quadrature failed to reach the requested tolerance.
    QuadratureStalled { context: String },
    /// The adaptive radial integrator exhausted its step budget.
    OdeStalled { context: String },
    /// A half-wave ladder recursion exhausted its rung budget without
    /// closing against its boundary.
    LadderStalled { rungs: usize },
    /// A rigorous bound contradicted the exact count; this always
    /// indicates a numerical or logic bug, never physics.
    SandwichViolation,
    /// The requested closed form is not available for this potential.
    Unsupported(String),
    /// A potential configuration file could not be parsed.
    Config { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::BadSamples { index, message } => {
                write!(f, "bad sample table at entry {index}: {message}")
            }
            Error::SingularAtOrigin => write!(f, "potential is singular at the origin"),
            Error::DerivativeAtJump { r } => {
                write!(f, "derivative requested at jump radius r = {r}")
            }
            Error::NoBracket { context } => {
                write!(f, "could not bracket a root while solving {context}")
            }
            Error::BelowOneStateThreshold { total } => write!(
                f,
                "attraction integral {total} is below the one-state threshold π/2; \
                 no bound state exists and no auxiliary radius is defined"
            ),
            Error::QuadratureStalled { context } => {
                write!(f, "adaptive quadrature stalled: {context}")
            }
            Error::OdeStalled { context } => {
                write!(f, "radial integration stalled: {context}")
            }
            Error::LadderStalled { rungs } => {
                write!(f, "half-wave ladder did not close within {rungs} rungs")
            }
            Error::SandwichViolation => {
                write!(f, "a rigorous bound contradicts the exact count (numerical bug)")
            }
            Error::Unsupported(what) => write!(f, "unsupported request: {what}"),
            Error::Config { line, message } => {
                write!(f, "config parse error on line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
