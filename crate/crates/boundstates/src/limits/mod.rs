//! Integer bounds on the bound-state count.
//!
//! Three families of bounds are implemented, all driven by the same
//! [`Potential`](crate::potential::Potential) interface:
//!
//! * [`classic`] — moment integrals (`∫ r|V|`, `∫ |V|^(1/2)`, mixed moments)
//!   and the two tail/depth-scaled lower bounds, plus the sufficient
//!   conditions for at least one bound state;
//! * [`phase`] — bounds built from the half-wave phase integral
//!   `S = ∫ |V|^(1/2) dr` with logarithmic depth-ratio corrections, sharp to
//!   `O(1)` for strong potentials;
//! * [`ladder`] — bounds from an explicit recursion of half-wave steps,
//!   equivalent to sandwiching the potential between piecewise-constant
//!   minorants/majorants.
//!
//! Every bound evaluates to a [`LimitValue`]: the raw right-hand side of the
//! inequality and the integer it implies for the count `N`. Raw values are
//! integerized conservatively — `floor` for upper bounds, `ceil` for lower
//! bounds — and flagged as `marginal` when the raw value sits within `1e-9`
//! of an integer, where quadrature noise could tip the rounded bound.

pub mod classic;
pub mod ladder;
pub mod phase;

/// Which side of the exact count a bound constrains.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// The bound asserts `N ≤ bound`.
    Upper,
    /// The bound asserts `N ≥ bound`.
    Lower,
}

/// Identifies one of the implemented bound formulas.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LimitName {
    /// `N ≤ ∫ r |V| dr`.
    MomentUpper,
    /// `N ≤ (2/π) ∫ |V|^(1/2) dr`.
    HalfWaveUpper,
    /// `N ≤ [∫ r²|V| dr · ∫ |V| dr]^(1/4)`.
    MixedMomentUpper,
    /// `N ≥ (2/π) ρ |V(ρ)|^(1/2) − 1/2` at the tail-balance radius.
    TailBalanceLower,
    /// `N ≥ (1/π) ∫ |V| dr / |V(0)|^(1/2) − 1/2`.
    DepthScaledLower,
    /// Phase upper bound with the depth ratio taken between `p` and `q`.
    PhaseUpper,
    /// Phase upper bound with the depth ratio anchored at the origin.
    PhaseUpperRegular,
    /// Phase lower bound anchored at the origin, evaluated at `q`.
    PhaseLowerRegular,
    /// Phase lower bound anchored at the origin, optimized over the
    /// depth-slope stationary radii.
    PhaseLowerStationary,
    /// Phase lower bound with the depth ratio between `p` and `q`; tolerates
    /// a singular origin.
    PhaseLowerSingular,
    /// Phase lower bound over the window `[t, s]`; tolerates a singular
    /// origin.
    PhaseLowerWindow,
    /// Upper bound from the upward half-wave ladder.
    LadderUpper,
    /// Lower bound from the downward half-wave ladder.
    LadderLower,
}

impl LimitName {
    /// Which side of the count this formula bounds.
    pub fn direction(self) -> Direction {
        match self {
            LimitName::MomentUpper
            | LimitName::HalfWaveUpper
            | LimitName::MixedMomentUpper
            | LimitName::PhaseUpper
            | LimitName::PhaseUpperRegular
            | LimitName::LadderUpper => Direction::Upper,
            LimitName::TailBalanceLower
            | LimitName::DepthScaledLower
            | LimitName::PhaseLowerRegular
            | LimitName::PhaseLowerStationary
            | LimitName::PhaseLowerSingular
            | LimitName::PhaseLowerWindow
            | LimitName::LadderLower => Direction::Lower,
        }
    }

    /// Stable machine-readable token, used in CSV headers and reports.
    pub fn label(self) -> &'static str {
        match self {
            LimitName::MomentUpper => "moment-upper",
            LimitName::HalfWaveUpper => "half-wave-upper",
            LimitName::MixedMomentUpper => "mixed-moment-upper",
            LimitName::TailBalanceLower => "tail-balance-lower",
            LimitName::DepthScaledLower => "depth-scaled-lower",
            LimitName::PhaseUpper => "phase-upper",
            LimitName::PhaseUpperRegular => "phase-upper-regular",
            LimitName::PhaseLowerRegular => "phase-lower-regular",
            LimitName::PhaseLowerStationary => "phase-lower-stationary",
            LimitName::PhaseLowerSingular => "phase-lower-singular",
            LimitName::PhaseLowerWindow => "phase-lower-window",
            LimitName::LadderUpper => "ladder-upper",
            LimitName::LadderLower => "ladder-lower",
        }
    }

    /// Every implemented formula, uppers first.
    pub const ALL: [LimitName; 13] = [
        LimitName::MomentUpper,
        LimitName::HalfWaveUpper,
        LimitName::MixedMomentUpper,
        LimitName::PhaseUpper,
        LimitName::PhaseUpperRegular,
        LimitName::LadderUpper,
        LimitName::TailBalanceLower,
        LimitName::DepthScaledLower,
        LimitName::PhaseLowerRegular,
        LimitName::PhaseLowerStationary,
        LimitName::PhaseLowerSingular,
        LimitName::PhaseLowerWindow,
        LimitName::LadderLower,
    ];
}

impl std::fmt::Display for LimitName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// One evaluated bound: the raw right-hand side and the integer it implies.
#[derive(Clone, Copy, Debug)]
pub struct LimitValue {
    /// Which formula produced this value.
    pub name: LimitName,
    /// Raw right-hand side of the inequality, before integerization.
    pub raw: f64,
    /// Integer form: `N ≤ bound` or `N ≥ bound` depending on direction.
    pub bound: usize,
    /// The raw value sits within `1e-9` of an integer; the rounded bound
    /// could be off by one in either direction at that precision.
    pub marginal: bool,
}

impl LimitValue {
    /// Integerizes `raw` according to the formula's direction.
    pub fn new(name: LimitName, raw: f64) -> LimitValue {
        let (bound, marginal) = integerize(name.direction(), raw);
        LimitValue {
            name,
            raw,
            bound,
            marginal,
        }
    }

    /// Which side of the count this value bounds.
    pub fn direction(self) -> Direction {
        self.name.direction()
    }

    /// True when the exact count `n` is consistent with this bound.
    pub fn admits(self, n: usize) -> bool {
        match self.direction() {
            Direction::Upper => n <= self.bound,
            Direction::Lower => n >= self.bound,
        }
    }
}

/// Rounds a raw bound to the tightest integer it implies; counts are never
/// negative, so the result saturates at zero.
fn integerize(direction: Direction, raw: f64) -> (usize, bool) {
    let nearest = raw.round();
    if (raw - nearest).abs() <= 1e-9 {
        (nearest.max(0.0) as usize, true)
    } else {
        let bound = match direction {
            Direction::Upper => raw.floor(),
            Direction::Lower => raw.ceil(),
        };
        (bound.max(0.0) as usize, false)
    }
}
