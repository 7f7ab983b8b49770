//! Attractive monotonic central potentials.
//!
//! Every potential `V(r)` handled by this crate satisfies, in units where
//! `ℏ²/(2m) = 1`,
//!
//! ```text
//! V(r) ≤ 0,        V'(r) ≥ 0,        r^(2-ε) V(r) → 0  (r → 0),
//!                                    r^(2+ε) V(r) → 0  (r → ∞),
//! ```
//!
//! i.e. it is everywhere attractive, monotonically nondecreasing, and decays
//! fast enough at both ends for the zero-energy radial problem to have a
//! finite number of S-wave bound states.
//!
//! Six classic shapes are built in (all parametrised by a dimensionless
//! coupling `g` and a range `R`):
//!
//! ```text
//! square well            V = -g²/R²                    for r ≤ R
//! Pöschl-Teller          V = -g²/R² · cosh⁻²(r/R)
//! exponential            V = -g²/R² · exp(-r/R)
//! Hulthén                V = -g²/R² / (exp(r/R) - 1)
//! Yukawa                 V = -g²/(rR) · exp(-r/R)
//! inverse square         V = -g²/(R+r)²                for r ≤ αR
//! ```
//!
//! The Hulthén and Yukawa wells diverge like `-1/r` at the origin; the
//! inverse-square well is the shifted, truncated form with an extra width
//! parameter `α > 0`. Arbitrary monotone wells can be supplied as sampled
//! tables (interpolated by a monotonicity-preserving cubic), and an
//! attractive Lorentz-scalar well `W(r)` of a relativistic (Klein-Gordon)
//! problem can be reduced to its equivalent nonrelativistic well
//! `V = 2mW - W²`.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Decay-envelope exponent slack used by [`Potential::validate`].
pub const DEFAULT_ENVELOPE_EPSILON: f64 = 0.1;

/// The six built-in well shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    SquareWell,
    PoschlTeller,
    Exponential,
    Hulthen,
    Yukawa,
    InverseSquare,
}

impl Kind {
    /// All built-in kinds, in presentation order.
    pub const ALL: [Kind; 6] = [
        Kind::SquareWell,
        Kind::PoschlTeller,
        Kind::Exponential,
        Kind::Hulthen,
        Kind::Yukawa,
        Kind::InverseSquare,
    ];

    /// Canonical CLI/config name.
    pub fn name(self) -> &'static str {
        match self {
            Kind::SquareWell => "square-well",
            Kind::PoschlTeller => "poschl-teller",
            Kind::Exponential => "exponential",
            Kind::Hulthen => "hulthen",
            Kind::Yukawa => "yukawa",
            Kind::InverseSquare => "inverse-square",
        }
    }

    /// Whether this kind takes the extra width parameter `α`.
    pub fn needs_alpha(self) -> bool {
        matches!(self, Kind::InverseSquare)
    }

    /// Whether the shape diverges like `-1/r` at the origin.
    pub fn origin_singular(self) -> bool {
        matches!(self, Kind::Hulthen | Kind::Yukawa)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "square-well" | "squarewell" | "sw" => Ok(Kind::SquareWell),
            "poschl-teller" | "poschlteller" | "pt" => Ok(Kind::PoschlTeller),
            "exponential" | "exp" => Ok(Kind::Exponential),
            "hulthen" => Ok(Kind::Hulthen),
            "yukawa" => Ok(Kind::Yukawa),
            "inverse-square" | "inversesquare" | "invsq" => Ok(Kind::InverseSquare),
            other => Err(Error::InvalidParameter(format!(
                "unknown potential kind `{other}` (expected one of: square-well, \
                 poschl-teller, exponential, hulthen, yukawa, inverse-square)"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An attractive monotonic central potential.
///
/// Construct through [`Potential::builtin`], [`Potential::from_table`] or
/// [`Potential::kg_reduce`]; all constructors enforce the admissibility
/// rules, so a `Potential` value can be assumed well-formed everywhere else
/// in the crate.
#[derive(Clone, Debug)]
pub struct Potential {
    shape: Shape,
}

#[derive(Clone, Debug)]
enum Shape {
    Builtin {
        kind: Kind,
        g: f64,
        r_scale: f64,
        /// Width parameter; only meaningful for `Kind::InverseSquare`.
        alpha: f64,
    },
    Tabulated(Table),
    KleinGordonReduced { w: Box<Potential>, mass: f64 },
}

impl Potential {
    /// Builds one of the six built-in wells.
    ///
    /// `alpha` is the width parameter of the inverse-square well and is
    /// ignored by the other kinds. Requires `g > 0`, `r_scale > 0` and,
    /// for the inverse-square well, `alpha > 0`, all finite.
    pub fn builtin(kind: Kind, g: f64, r_scale: f64, alpha: f64) -> Result<Potential> {
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "coupling g must be finite and positive, got {g}"
            )));
        }
        if !(r_scale.is_finite() && r_scale > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "range R must be finite and positive, got {r_scale}"
            )));
        }
        if kind.needs_alpha() && !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "width alpha must be finite and positive, got {alpha}"
            )));
        }
        Ok(Potential {
            shape: Shape::Builtin {
                kind,
                g,
                r_scale,
                alpha: if kind.needs_alpha() { alpha } else { f64::NAN },
            },
        })
    }

    /// Builds a potential from `(radius, value)` samples.
    ///
    /// Radii must be nondecreasing and start at `≥ 0`; values must be
    /// finite, nonpositive and nondecreasing, with at least one strictly
    /// negative entry. A repeated radius encodes a jump and its value must
    /// strictly increase across the pair (as in a well edge). The potential
    /// is the monotonicity-preserving piecewise cubic through the samples,
    /// extended by its first value down to `r = 0` and by zero beyond the
    /// last radius.
    pub fn from_table(samples: &[(f64, f64)]) -> Result<Potential> {
        let table = Table::build(samples, true)?;
        Ok(Potential {
            shape: Shape::Tabulated(table),
        })
    }

    /// Builds a tabulated potential *without* the monotonicity and sign
    /// checks. Interpolation still works, but nothing else is guaranteed;
    /// this exists so [`Potential::validate`] can be exercised on bad data.
    pub fn from_table_unchecked(samples: &[(f64, f64)]) -> Result<Potential> {
        let table = Table::build(samples, false)?;
        Ok(Potential {
            shape: Shape::Tabulated(table),
        })
    }

    /// Reduces an attractive Lorentz-scalar well `W(r)` of the relativistic
    /// (Klein-Gordon) problem with mass `m` to the equivalent
    /// nonrelativistic well `V = 2mW - W²` (in units `ℏ = c = 1`).
    ///
    /// `w` must itself be an admissible potential and must stay bounded at
    /// the origin: a `-1/r` scalar well would square to an inadmissible
    /// `-1/r²` term, so origin-singular shapes are rejected.
    pub fn kg_reduce(w: Potential, mass: f64) -> Result<Potential> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "mass must be finite and positive, got {mass}"
            )));
        }
        if w.origin_singular() {
            return Err(Error::InvalidParameter(
                "Klein-Gordon reduction requires a scalar well that is bounded at the \
                 origin; -1/r shapes square to an inadmissible -1/r² term"
                    .into(),
            ));
        }
        Ok(Potential {
            shape: Shape::KleinGordonReduced {
                w: Box::new(w),
                mass,
            },
        })
    }

    /// The built-in kind, when this is a built-in well.
    pub fn kind(&self) -> Option<Kind> {
        match &self.shape {
            Shape::Builtin { kind, .. } => Some(*kind),
            _ => None,
        }
    }

    /// `V(r)` for `r ≥ 0`.
    ///
    /// Total on the closed half-line: origin-singular shapes return
    /// `-∞` at exactly `r = 0` (see [`Potential::eval_checked`] for the
    /// error-reporting variant) and every shape returns `0` beyond its
    /// support.
    pub fn eval(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0, "potential evaluated at negative radius {r}");
        match &self.shape {
            Shape::Builtin {
                kind,
                g,
                r_scale,
                alpha,
            } => {
                let depth = (g / r_scale) * (g / r_scale);
                let x = r / r_scale;
                match kind {
                    Kind::SquareWell => {
                        if x <= 1.0 {
                            -depth
                        } else {
                            0.0
                        }
                    }
                    Kind::PoschlTeller => {
                        let sech = 1.0 / x.cosh();
                        -depth * sech * sech
                    }
                    Kind::Exponential => -depth * (-x).exp(),
                    Kind::Hulthen => -depth / x.exp_m1(),
                    Kind::Yukawa => -g * g / (r * r_scale) * (-x).exp(),
                    Kind::InverseSquare => {
                        if x <= *alpha {
                            let d = r_scale + r;
                            -g * g / (d * d)
                        } else {
                            0.0
                        }
                    }
                }
            }
            Shape::Tabulated(table) => table.eval(r),
            Shape::KleinGordonReduced { w, mass } => {
                let wv = w.eval(r);
                2.0 * mass * wv - wv * wv
            }
        }
    }

    /// `V(r)` with explicit error reporting: `r = 0` on an origin-singular
    /// shape is refused instead of returning `-∞`.
    pub fn eval_checked(&self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "radius must be finite and nonnegative, got {r}"
            )));
        }
        if r == 0.0 && self.origin_singular() {
            return Err(Error::SingularAtOrigin);
        }
        Ok(self.eval(r))
    }

    /// `dV/dr` for `r > 0`.
    ///
    /// At a jump radius (well edge of the square or inverse-square well, or
    /// a repeated radius of a table) the one-sided limit from the left is
    /// returned; [`Potential::deriv_checked`] reports those radii as errors
    /// instead.
    pub fn deriv(&self, r: f64) -> f64 {
        debug_assert!(r > 0.0, "derivative requested at nonpositive radius {r}");
        match &self.shape {
            Shape::Builtin {
                kind,
                g,
                r_scale,
                alpha,
            } => {
                let x = r / r_scale;
                let slope_scale = g * g / (r_scale * r_scale * r_scale);
                match kind {
                    Kind::SquareWell => 0.0,
                    Kind::PoschlTeller => {
                        let sech = 1.0 / x.cosh();
                        2.0 * slope_scale * sech * sech * x.tanh()
                    }
                    Kind::Exponential => slope_scale * (-x).exp(),
                    Kind::Hulthen => {
                        let em1 = x.exp_m1();
                        slope_scale * x.exp() / (em1 * em1)
                    }
                    Kind::Yukawa => g * g * (-x).exp() * (r + r_scale) / (r * r * r_scale * r_scale),
                    Kind::InverseSquare => {
                        if x <= *alpha {
                            let d = r_scale + r;
                            2.0 * g * g / (d * d * d)
                        } else {
                            0.0
                        }
                    }
                }
            }
            Shape::Tabulated(table) => table.deriv(r),
            Shape::KleinGordonReduced { w, mass } => {
                2.0 * w.deriv(r) * (mass - w.eval(r))
            }
        }
    }

    /// `dV/dr` with explicit error reporting at jump radii and at `r = 0`.
    pub fn deriv_checked(&self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "derivative radius must be finite and positive, got {r}"
            )));
        }
        if self.jump_radii().iter().any(|&j| j == r) {
            return Err(Error::DerivativeAtJump { r });
        }
        Ok(self.deriv(r))
    }

    /// Whether `V(r) → -∞` as `r → 0`.
    pub fn origin_singular(&self) -> bool {
        match &self.shape {
            Shape::Builtin { kind, .. } => kind.origin_singular(),
            Shape::Tabulated(_) => false,
            Shape::KleinGordonReduced { .. } => false,
        }
    }

    /// Whether `∫₀ |V| dr` converges at the origin (needed by the moment
    /// bounds that integrate `|V|` from zero). False exactly for the `-1/r`
    /// origin-singular shapes.
    pub fn abs_integrable_at_origin(&self) -> bool {
        !self.origin_singular()
    }

    /// The radius beyond which `V ≡ 0`, when the support is compact.
    pub fn support_end(&self) -> Option<f64> {
        match &self.shape {
            Shape::Builtin {
                kind,
                r_scale,
                alpha,
                ..
            } => match kind {
                Kind::SquareWell => Some(*r_scale),
                Kind::InverseSquare => Some(alpha * r_scale),
                _ => None,
            },
            Shape::Tabulated(table) => Some(table.support_end),
            Shape::KleinGordonReduced { w, .. } => w.support_end(),
        }
    }

    /// Characteristic length of the well, used to seed numeric grids.
    pub fn r_scale(&self) -> f64 {
        match &self.shape {
            Shape::Builtin { r_scale, .. } => *r_scale,
            Shape::Tabulated(table) => table.support_end.max(table.last_radius()),
            Shape::KleinGordonReduced { w, .. } => w.r_scale(),
        }
    }

    /// Radii where the potential is not smooth (jumps and table knots),
    /// in increasing order. Quadrature and the radial integrators split
    /// their intervals here.
    pub fn breakpoints(&self) -> Vec<f64> {
        match &self.shape {
            Shape::Builtin { .. } => match self.support_end() {
                Some(se) => vec![se],
                None => Vec::new(),
            },
            Shape::Tabulated(table) => table.breakpoints(),
            Shape::KleinGordonReduced { w, .. } => w.breakpoints(),
        }
    }

    /// Radii where `V` itself jumps (a subset of [`Potential::breakpoints`]).
    pub fn jump_radii(&self) -> Vec<f64> {
        match &self.shape {
            Shape::Builtin { kind, .. } => match kind {
                Kind::SquareWell | Kind::InverseSquare => vec![self.support_end().unwrap()],
                _ => Vec::new(),
            },
            Shape::Tabulated(table) => table.jump_radii(),
            Shape::KleinGordonReduced { w, .. } => w.jump_radii(),
        }
    }

    /// Runs admissibility diagnostics on a log-spaced radial grid of at
    /// least 16 points: nonpositivity, monotonicity, and the power-law
    /// decay envelopes at the origin and at infinity.
    pub fn validate(&self, grid_size: usize) -> Diagnostics {
        let n = grid_size.max(16);
        let scale = self.r_scale();
        let r_hi = self.support_end().unwrap_or(40.0 * scale);
        let r_lo = 1e-6 * scale;
        let ratio = (r_hi / r_lo).powf(1.0 / (n as f64 - 1.0));
        let radii: Vec<f64> = (0..n).map(|i| r_lo * ratio.powi(i as i32)).collect();
        let values: Vec<f64> = radii.iter().map(|&r| self.eval(r)).collect();
        let vscale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));

        let mut violations = Vec::new();
        let mut notes = Vec::new();

        for (&r, &v) in radii.iter().zip(&values) {
            if v > 1e-12 * vscale {
                violations.push(format!("positive value V({r:.6e}) = {v:.6e}"));
            }
        }
        for i in 0..n - 1 {
            let slack = 1e-9 * (values[i].abs() + values[i + 1].abs() + 1e-300);
            if values[i + 1] < values[i] - slack {
                violations.push(format!(
                    "not nondecreasing between r = {:.6e} and r = {:.6e} \
                     (V goes {:.6e} -> {:.6e})",
                    radii[i],
                    radii[i + 1],
                    values[i],
                    values[i + 1]
                ));
            }
        }

        // Origin envelope: r^(2-ε)|V| must shrink toward the origin.
        let eps = DEFAULT_ENVELOPE_EPSILON;
        let env = |i: usize| radii[i].powf(2.0 - eps) * values[i].abs();
        if env(0) > env(1) * (1.0 + 1e-6) + 1e-12 * vscale * scale.powf(2.0 - eps) {
            violations.push(format!(
                "origin envelope r^(2-ε)|V| grows toward r = 0 \
                 ({:.6e} at r = {:.6e} vs {:.6e} at r = {:.6e})",
                env(0),
                radii[0],
                env(1),
                radii[1]
            ));
        }

        // Tail envelope: r^(2+ε)|V| must shrink outward. Compact support
        // satisfies it trivially.
        if self.support_end().is_some() {
            notes.push("compact support: tail envelope holds trivially".into());
        } else {
            let tenv = |i: usize| radii[i].powf(2.0 + eps) * values[i].abs();
            if tenv(n - 1) > tenv(n - 2) * (1.0 + 1e-6) + 1e-12 * vscale * scale.powf(2.0 + eps) {
                violations.push(format!(
                    "tail envelope r^(2+ε)|V| grows outward \
                     ({:.6e} at r = {:.6e} vs {:.6e} at r = {:.6e})",
                    tenv(n - 2),
                    radii[n - 2],
                    tenv(n - 1),
                    radii[n - 1]
                ));
            }
        }

        if self.origin_singular() {
            notes.push("origin-singular shape: |V| ~ 1/r near r = 0".into());
        }

        Diagnostics {
            pass: violations.is_empty(),
            violations,
            notes,
            checked_points: n,
        }
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Builtin {
                kind,
                g,
                r_scale,
                alpha,
            } => {
                if kind.needs_alpha() {
                    write!(f, "{kind} (g = {g}, R = {r_scale}, alpha = {alpha})")
                } else {
                    write!(f, "{kind} (g = {g}, R = {r_scale})")
                }
            }
            Shape::Tabulated(table) => {
                write!(
                    f,
                    "tabulated ({} samples, support [0, {}])",
                    table.sample_count(),
                    table.support_end
                )
            }
            Shape::KleinGordonReduced { w, mass } => {
                write!(f, "Klein-Gordon reduced (m = {mass}) of [{w}]")
            }
        }
    }
}

/// Result of [`Potential::validate`].
#[derive(Clone, Debug)]
pub struct Diagnostics {
    /// True when no admissibility violation was found.
    pub pass: bool,
    /// Human-readable descriptions of every violation.
    pub violations: Vec<String>,
    /// Non-fatal remarks (singular origin, compact support, ...).
    pub notes: Vec<String>,
    /// Number of grid points inspected.
    pub checked_points: usize,
}

/// A sampled well: smooth runs of monotone cubic interpolation separated
/// by jump radii.
#[derive(Clone, Debug)]
struct Table {
    pieces: Vec<Piece>,
    support_end: f64,
}

/// One smooth run: cubic Hermite with monotonicity-preserving knot slopes.
#[derive(Clone, Debug)]
struct Piece {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl Table {
    fn build(samples: &[(f64, f64)], strict: bool) -> Result<Table> {
        if samples.len() < 2 {
            return Err(Error::BadSamples {
                index: samples.len(),
                message: "need at least two samples".into(),
            });
        }
        for (i, &(r, v)) in samples.iter().enumerate() {
            if !r.is_finite() || !v.is_finite() {
                return Err(Error::BadSamples {
                    index: i,
                    message: format!("nonfinite sample ({r}, {v})"),
                });
            }
            if r < 0.0 {
                return Err(Error::BadSamples {
                    index: i,
                    message: format!("negative radius {r}"),
                });
            }
        }
        for i in 1..samples.len() {
            let (r0, v0) = samples[i - 1];
            let (r1, v1) = samples[i];
            if r1 < r0 {
                return Err(Error::BadSamples {
                    index: i,
                    message: format!("radii must be nondecreasing ({r0} then {r1})"),
                });
            }
            if r1 == r0 && v1 <= v0 {
                return Err(Error::BadSamples {
                    index: i,
                    message: format!(
                        "repeated radius {r0} must encode an upward jump \
                         (values {v0} then {v1})"
                    ),
                });
            }
            if strict && v1 < v0 {
                return Err(Error::BadSamples {
                    index: i,
                    message: format!("values must be nondecreasing ({v0} then {v1})"),
                });
            }
        }
        if strict {
            let last = samples[samples.len() - 1].1;
            if last > 0.0 {
                return Err(Error::BadSamples {
                    index: samples.len() - 1,
                    message: format!("values must stay nonpositive (final value {last})"),
                });
            }
            if samples.iter().all(|&(_, v)| v == 0.0) {
                return Err(Error::BadSamples {
                    index: 0,
                    message: "well is identically zero".into(),
                });
            }
        }

        // Split into smooth runs at repeated radii.
        let mut pieces = Vec::new();
        let mut run: Vec<(f64, f64)> = vec![samples[0]];
        for &(r, v) in &samples[1..] {
            if r == run.last().unwrap().0 {
                pieces.push(Piece::fit(&run));
                run = vec![(r, v)];
            } else {
                run.push((r, v));
            }
        }
        pieces.push(Piece::fit(&run));

        // Support ends where the trailing zero run begins (or at the last
        // radius if the final value is still negative: an implicit edge).
        let mut support_end = samples[samples.len() - 1].0;
        for &(r, v) in samples.iter().rev() {
            if v == 0.0 {
                support_end = r;
            } else {
                break;
            }
        }

        Ok(Table {
            pieces,
            support_end,
        })
    }

    fn eval(&self, r: f64) -> f64 {
        if r > self.support_end {
            return 0.0;
        }
        // A radius shared by two pieces belongs to the left one, so the
        // well edge keeps its inside value.
        for piece in &self.pieces {
            if r <= piece.last_x() {
                return piece.eval(r);
            }
        }
        0.0
    }

    fn deriv(&self, r: f64) -> f64 {
        if r > self.support_end {
            return 0.0;
        }
        for piece in &self.pieces {
            if r <= piece.last_x() {
                return piece.deriv(r);
            }
        }
        0.0
    }

    fn last_radius(&self) -> f64 {
        self.pieces.last().map(|p| p.last_x()).unwrap_or(0.0)
    }

    fn sample_count(&self) -> usize {
        self.pieces.iter().map(|p| p.x.len()).sum()
    }

    fn breakpoints(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .pieces
            .iter()
            .flat_map(|p| p.x.iter().copied())
            .filter(|&x| x > 0.0)
            .collect();
        if self.support_end > 0.0 {
            out.push(self.support_end);
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }

    fn jump_radii(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for pair in self.pieces.windows(2) {
            out.push(pair[0].last_x());
        }
        // Implicit edge when the well does not close smoothly to zero.
        if let Some(last) = self.pieces.last() {
            if *last.y.last().unwrap() < 0.0 {
                out.push(last.last_x());
            }
        }
        out
    }
}

impl Piece {
    /// Fits monotonicity-preserving knot slopes (harmonic-mean weighting of
    /// adjacent secants, zero across local extrema, one-sided secants at the
    /// run ends).
    fn fit(run: &[(f64, f64)]) -> Piece {
        let x: Vec<f64> = run.iter().map(|s| s.0).collect();
        let y: Vec<f64> = run.iter().map(|s| s.1).collect();
        let n = x.len();
        let mut d = vec![0.0; n];
        if n == 1 {
            return Piece { x, y, d };
        }
        let h: Vec<f64> = (0..n - 1).map(|k| x[k + 1] - x[k]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|k| (y[k + 1] - y[k]) / h[k]).collect();
        d[0] = delta[0];
        d[n - 1] = delta[n - 2];
        for k in 1..n - 1 {
            let (dl, dr) = (delta[k - 1], delta[k]);
            if dl * dr <= 0.0 {
                d[k] = 0.0;
            } else {
                let w1 = 2.0 * h[k] + h[k - 1];
                let w2 = h[k] + 2.0 * h[k - 1];
                d[k] = 3.0 * (h[k - 1] + h[k]) / (w1 / dl + w2 / dr);
            }
        }
        Piece { x, y, d }
    }

    fn last_x(&self) -> f64 {
        *self.x.last().unwrap()
    }

    fn segment(&self, r: f64) -> usize {
        match self.x.binary_search_by(|v| v.total_cmp(&r)) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.x.len().saturating_sub(2)),
        }
    }

    fn eval(&self, r: f64) -> f64 {
        if self.x.len() == 1 || r <= self.x[0] {
            // Constant extension toward the origin.
            return self.y[0];
        }
        let k = self.segment(r);
        let h = self.x[k + 1] - self.x[k];
        let t = (r - self.x[k]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * self.y[k]
            + (t3 - 2.0 * t2 + t) * h * self.d[k]
            + (-2.0 * t3 + 3.0 * t2) * self.y[k + 1]
            + (t3 - t2) * h * self.d[k + 1]
    }

    fn deriv(&self, r: f64) -> f64 {
        if self.x.len() == 1 || r <= self.x[0] {
            return 0.0;
        }
        let k = self.segment(r);
        let h = self.x[k + 1] - self.x[k];
        let t = (r - self.x[k]) / h;
        let t2 = t * t;
        (6.0 * t2 - 6.0 * t) * self.y[k] / h
            + (3.0 * t2 - 4.0 * t + 1.0) * self.d[k]
            + (-6.0 * t2 + 6.0 * t) * self.y[k + 1] / h
            + (3.0 * t2 - 2.0 * t) * self.d[k + 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(g: f64, r: f64) -> Potential {
        Potential::builtin(Kind::SquareWell, g, r, f64::NAN).unwrap()
    }

    #[test]
    fn square_well_is_flat_then_zero() {
        let v = sw(10.0, 1.0);
        assert_eq!(v.eval(0.0), -100.0);
        assert_eq!(v.eval(0.5), -100.0);
        assert_eq!(v.eval(1.0), -100.0);
        assert_eq!(v.eval(1.0 + 1e-12), 0.0);
        assert_eq!(v.deriv(0.5), 0.0);
        assert_eq!(v.support_end(), Some(1.0));
        assert_eq!(v.jump_radii(), vec![1.0]);
    }

    #[test]
    fn yukawa_matches_closed_form() {
        let v = Potential::builtin(Kind::Yukawa, 2.0, 1.0, f64::NAN).unwrap();
        // -g²/(rR) e^(-r/R) at r = 2: -(4/2) e^(-2)
        let expected = -2.0 * (-2.0f64).exp();
        assert!((v.eval(2.0) - expected).abs() < 1e-15);
        assert_eq!(v.eval(0.0), f64::NEG_INFINITY);
        assert_eq!(v.eval_checked(0.0), Err(Error::SingularAtOrigin));
        assert!(v.origin_singular());
        assert!(!v.abs_integrable_at_origin());
    }

    #[test]
    fn hulthen_slope_matches_closed_form() {
        let v = Potential::builtin(Kind::Hulthen, 1.0, 1.0, f64::NAN).unwrap();
        // dV/dr = (g²/R³) e^(r/R) / (e^(r/R) - 1)² at r = R: e/(e-1)²
        let e = std::f64::consts::E;
        let expected = e / ((e - 1.0) * (e - 1.0));
        assert!((v.deriv(1.0) - expected).abs() < 1e-14);
        // Near the origin the well behaves like -g²/(rR).
        let r = 1e-9;
        let ratio = v.eval(r) / (-1.0 / r);
        assert!((ratio - 1.0).abs() < 1e-8, "ratio = {ratio}");
    }

    #[test]
    fn inverse_square_truncates_at_alpha_r() {
        let v = Potential::builtin(Kind::InverseSquare, 10.0, 1.0, 100.0).unwrap();
        assert!((v.eval(0.0) + 100.0).abs() < 1e-12);
        assert!((v.eval(1.0) + 25.0).abs() < 1e-12);
        assert!((v.eval(100.0) + 100.0 / (101.0f64 * 101.0)).abs() < 1e-12);
        assert_eq!(v.eval(100.0 + 1e-9), 0.0);
        assert_eq!(v.support_end(), Some(100.0));
        let slope = v.deriv(1.0);
        assert!((slope - 2.0 * 100.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn builtins_scale_with_r() {
        // V(r; g, R) = V(r/R; g, 1) / R² for every built-in shape.
        for kind in Kind::ALL {
            let unit = Potential::builtin(kind, 7.3, 1.0, 2.0).unwrap();
            let wide = Potential::builtin(kind, 7.3, 3.0, 2.0).unwrap();
            for &r in &[0.3, 1.1, 2.9, 5.7] {
                let a = wide.eval(r);
                let b = unit.eval(r / 3.0) / 9.0;
                assert!(
                    (a - b).abs() <= 1e-12 * (a.abs() + b.abs() + 1e-300),
                    "{kind}: {a} vs {b} at r = {r}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Potential::builtin(Kind::SquareWell, 0.0, 1.0, 1.0).is_err());
        assert!(Potential::builtin(Kind::SquareWell, -1.0, 1.0, 1.0).is_err());
        assert!(Potential::builtin(Kind::SquareWell, 1.0, 0.0, 1.0).is_err());
        assert!(Potential::builtin(Kind::InverseSquare, 1.0, 1.0, 0.0).is_err());
        assert!(Potential::builtin(Kind::SquareWell, f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn table_interpolates_between_samples() {
        let v = Potential::from_table(&[(0.0, -4.0), (2.0, -1.0), (4.0, 0.0)]).unwrap();
        let mid = v.eval(3.0);
        assert!((-1.0..=0.0).contains(&mid), "eval(3) = {mid}");
        assert_eq!(v.eval(5.0), 0.0);
        assert_eq!(v.support_end(), Some(4.0));
        // Monotone between every sampled pair: scan a fine grid.
        let mut prev = v.eval(0.0);
        for i in 1..=400 {
            let cur = v.eval(4.0 * i as f64 / 400.0);
            assert!(cur >= prev - 1e-12, "dip at i = {i}: {prev} -> {cur}");
            prev = cur;
        }
    }

    #[test]
    fn table_with_jump_reproduces_square_well() {
        let v = Potential::from_table(&[(0.0, -100.0), (1.0, -100.0), (1.0, 0.0)]).unwrap();
        let reference = sw(10.0, 1.0);
        for &r in &[0.0, 0.25, 0.5, 0.99, 1.0, 1.01, 2.0] {
            assert_eq!(v.eval(r), reference.eval(r), "at r = {r}");
        }
        assert_eq!(v.support_end(), Some(1.0));
        assert_eq!(v.jump_radii(), vec![1.0]);
        assert!(v.deriv_checked(1.0).is_err());
        assert!(v.deriv_checked(0.5).is_ok());
    }

    #[test]
    fn table_rejects_bad_samples() {
        // Decreasing values.
        assert!(matches!(
            Potential::from_table(&[(0.0, -1.0), (1.0, -2.0)]),
            Err(Error::BadSamples { index: 1, .. })
        ));
        // Repeated radius without an upward jump.
        assert!(Potential::from_table(&[(0.0, -1.0), (1.0, -1.0), (1.0, -1.0), (2.0, 0.0)]).is_err());
        // Positive value.
        assert!(Potential::from_table(&[(0.0, -1.0), (1.0, 0.5)]).is_err());
        // Decreasing radii.
        assert!(Potential::from_table(&[(1.0, -1.0), (0.5, -0.5)]).is_err());
        // Identically zero.
        assert!(Potential::from_table(&[(0.0, 0.0), (1.0, 0.0)]).is_err());
        // Too short.
        assert!(Potential::from_table(&[(0.0, -1.0)]).is_err());
    }

    #[test]
    fn kg_reduction_combines_linear_and_quadratic_terms() {
        let w = Potential::builtin(Kind::Exponential, 2.0, 1.0, f64::NAN).unwrap();
        let v = Potential::kg_reduce(w, 1.0).unwrap();
        // V(0) = 2m W(0) - W(0)² = -8 - 16
        assert!((v.eval(0.0) + 24.0).abs() < 1e-12);
        // Still attractive and monotone on a grid.
        let mut prev = v.eval(1e-6);
        for i in 1..200 {
            let r = 1e-6 + 20.0 * i as f64 / 200.0;
            let cur = v.eval(r);
            assert!(cur <= 1e-12 && cur >= prev - 1e-12);
            prev = cur;
        }
        assert!(v.deriv(0.7) >= 0.0);
    }

    #[test]
    fn kg_reduction_rejects_singular_scalar_wells() {
        let w = Potential::builtin(Kind::Yukawa, 2.0, 1.0, f64::NAN).unwrap();
        assert!(Potential::kg_reduce(w, 1.0).is_err());
        let w = Potential::builtin(Kind::Exponential, 2.0, 1.0, f64::NAN).unwrap();
        assert!(Potential::kg_reduce(w, 0.0).is_err());
    }

    #[test]
    fn validate_passes_admissible_wells() {
        for kind in Kind::ALL {
            let v = Potential::builtin(kind, 5.0, 1.0, 10.0).unwrap();
            let diag = v.validate(64);
            assert!(diag.pass, "{kind}: {:?}", diag.violations);
        }
        let kg = Potential::kg_reduce(
            Potential::builtin(Kind::PoschlTeller, 3.0, 2.0, f64::NAN).unwrap(),
            1.5,
        )
        .unwrap();
        assert!(kg.validate(64).pass);
    }

    #[test]
    fn validate_flags_a_dip() {
        let v = Potential::from_table_unchecked(&[
            (0.0, -1.0),
            (1.0, -0.5),
            (2.0, -0.6),
            (3.0, 0.0),
        ])
        .unwrap();
        let diag = v.validate(64);
        assert!(!diag.pass);
        assert!(diag
            .violations
            .iter()
            .any(|v| v.contains("not nondecreasing")));
    }

    #[test]
    fn kind_parses_from_cli_names() {
        assert_eq!("square-well".parse::<Kind>().unwrap(), Kind::SquareWell);
        assert_eq!("pt".parse::<Kind>().unwrap(), Kind::PoschlTeller);
        assert_eq!("HULTHEN".parse::<Kind>().unwrap(), Kind::Hulthen);
        assert_eq!("inverse_square".parse::<Kind>().unwrap(), Kind::InverseSquare);
        assert!("coulomb".parse::<Kind>().is_err());
    }
}
