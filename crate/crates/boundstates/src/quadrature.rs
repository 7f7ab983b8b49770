//! Weighted moments of a potential.
//!
//! The limits in this crate consume four radial moments,
//!
//! ```text
//! ∫ |V(r)|^(1/2) dr      (attraction / phase integral)
//! ∫ |V(r)| dr
//! ∫ r |V(r)| dr          (Bargmann moment)
//! ∫ r² |V(r)| dr
//! ```
//!
//! over `[a, b]` or `[a, ∞)`. They are evaluated by adaptive Gauss-Kronrod
//! (7-15) bisection on the smooth pieces of the potential, with two special
//! treatments:
//!
//! * origin-singular shapes (`|V| ~ 1/r`) get the substitution `r = u²`
//!   for the square-root moment, which turns the `r^(-1/2)` endpoint into a
//!   smooth integrand;
//! * infinite upper limits are truncated at a radius whose remainder is
//!   certified small by geometric window extrapolation (the window
//!   integrals of an admissible tail decay at least geometrically).

use crate::error::{Error, Result};
use crate::potential::Potential;

/// Default relative tolerance used throughout the crate.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// The four radial weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentKind {
    /// `|V|^(1/2)`
    SqrtAbsV,
    /// `|V|`
    AbsV,
    /// `r |V|`
    RAbsV,
    /// `r² |V|`
    R2AbsV,
}

impl MomentKind {
    fn weight(self, r: f64) -> f64 {
        match self {
            MomentKind::SqrtAbsV | MomentKind::AbsV => 1.0,
            MomentKind::RAbsV => r,
            MomentKind::R2AbsV => r * r,
        }
    }

    fn integrand(self, pot: &Potential, r: f64) -> f64 {
        let depth = (-pot.eval(r)).max(0.0);
        match self {
            MomentKind::SqrtAbsV => depth.sqrt(),
            _ => self.weight(r) * depth,
        }
    }
}

/// One requested moment: kind and integration interval (`upper` may be
/// `f64::INFINITY`).
#[derive(Clone, Copy, Debug)]
pub struct IntegralSpec {
    pub kind: MomentKind,
    pub lower: f64,
    pub upper: f64,
}

impl IntegralSpec {
    pub fn full(kind: MomentKind) -> IntegralSpec {
        IntegralSpec {
            kind,
            lower: 0.0,
            upper: f64::INFINITY,
        }
    }

    pub fn over(kind: MomentKind, lower: f64, upper: f64) -> IntegralSpec {
        IntegralSpec { kind, lower, upper }
    }
}

/// Evaluates one weighted moment of `pot` to relative tolerance `rel_tol`.
pub fn integrate(pot: &Potential, spec: IntegralSpec, rel_tol: f64) -> Result<f64> {
    if !(spec.lower >= 0.0 && spec.lower.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "lower integration limit must be finite and nonnegative, got {}",
            spec.lower
        )));
    }
    if spec.upper < spec.lower {
        return Err(Error::InvalidParameter(format!(
            "upper integration limit {} below lower {}",
            spec.upper, spec.lower
        )));
    }
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "relative tolerance must lie in (0, 1), got {rel_tol}"
        )));
    }
    if spec.kind == MomentKind::AbsV && spec.lower == 0.0 && !pot.abs_integrable_at_origin() {
        return Err(Error::Unsupported(
            "∫|V| dr diverges at the origin for a -1/r shape".into(),
        ));
    }

    // Compact support (or an explicit finite upper limit) reduces to a
    // finite integral; otherwise certify a truncation radius first.
    let upper = match pot.support_end() {
        Some(se) => spec.upper.min(se),
        None => spec.upper,
    };
    if upper.is_finite() {
        return finite_moment(pot, spec.kind, spec.lower, upper, rel_tol);
    }

    let start = window_start(pot, spec.lower);
    let head = finite_moment(pot, spec.kind, spec.lower, start, rel_tol * 0.25)?;
    let (windows, _) = certified_windows(pot, spec.kind, start, rel_tol, head)?;
    Ok(head + windows)
}

/// Integrates a moment over a finite interval, splitting at the
/// potential's breakpoints and substituting `r = u²` where the square-root
/// moment is origin-singular.
fn finite_moment(
    pot: &Potential,
    kind: MomentKind,
    lower: f64,
    upper: f64,
    rel_tol: f64,
) -> Result<f64> {
    if upper <= lower {
        return Ok(0.0);
    }
    let mut cuts = vec![lower];
    for b in pot.breakpoints() {
        if b > lower && b < upper {
            cuts.push(b);
        }
    }
    cuts.push(upper);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    // Near-origin substitution window for the singular square-root moment.
    let needs_subst = kind == MomentKind::SqrtAbsV && pot.origin_singular() && lower < 1e-3 * pot.r_scale();
    let piece_tol = rel_tol / (cuts.len() as f64);
    let mut total = 0.0;
    for pair in cuts.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if needs_subst && a < 0.5 * pot.r_scale() {
            // ∫ f(r) dr = ∫ f(u²) 2u du on r = u², smooth at u = 0.
            let value = adaptive(
                |u| 2.0 * u * kind.integrand(pot, u * u),
                a.sqrt(),
                b.sqrt(),
                piece_tol,
            )?;
            total += value;
        } else {
            total += adaptive(|r| kind.integrand(pot, r), a, b, piece_tol)?;
        }
    }
    Ok(total)
}

/// Picks where the geometric tail windows begin.
fn window_start(pot: &Potential, lower: f64) -> f64 {
    let scale = pot.r_scale();
    (2.0 * scale).max(lower * 1.5 + scale)
}

/// Integrates `[start, ∞)` by doubling windows, stopping once the
/// geometric remainder estimate drops below `rel_tol` of the running
/// total. Returns `(tail integral, certified stop radius)`.
fn certified_windows(
    pot: &Potential,
    kind: MomentKind,
    start: f64,
    rel_tol: f64,
    head: f64,
) -> Result<(f64, f64)> {
    improper(|r| kind.integrand(pot, r), start, rel_tol, head.abs())
}

/// Doubling-window integration of an arbitrary integrand over
/// `[start, ∞)`. The remainder beyond the certified stop radius is bounded
/// geometrically (admissible tails decay faster than `r^(-2-ε)`, so window
/// integrals of `|f|` eventually shrink by a fixed ratio) and compared
/// against `rel_tol · max(scale_hint, |running total|)`.
///
/// Returns `(tail integral, stop radius)`.
pub(crate) fn improper<F: Fn(f64) -> f64>(
    f: F,
    start: f64,
    rel_tol: f64,
    scale_hint: f64,
) -> Result<(f64, f64)> {
    let mut a = start;
    let mut sum = 0.0;
    let mut prev_window = f64::INFINITY;
    for _ in 0..64 {
        let b = 2.0 * a;
        let w = adaptive_floor(&f, a, b, rel_tol * 0.25, scale_hint * 0.05)?;
        sum += w;
        let size = w.abs();
        let total = (scale_hint + sum.abs()).max(f64::MIN_POSITIVE);
        if size < prev_window {
            let rho = if prev_window.is_finite() && prev_window > 0.0 {
                (size / prev_window).min(0.9)
            } else {
                0.9
            };
            let remainder = size * rho / (1.0 - rho);
            if remainder <= rel_tol * total {
                return Ok((sum, b));
            }
        }
        prev_window = size;
        a = b;
    }
    Err(Error::QuadratureStalled {
        context: format!("tail windows did not converge from r = {start}"),
    })
}

/// Integrates an arbitrary bounded integrand against the geometry of a
/// potential: splits at the potential's breakpoints, truncates at the
/// support end when there is one, and otherwise extends to infinity with
/// certified windows. `scale_hint` sets the absolute scale that "zero"
/// is measured against (integrals of sign-changing integrands may cancel
/// to zero, where a purely relative tolerance would be unattainable).
pub(crate) fn integral_of<F: Fn(f64) -> f64>(
    pot: &Potential,
    f: F,
    rel_tol: f64,
    scale_hint: f64,
) -> Result<f64> {
    let split = |a: f64, b: f64, tol: f64| -> Result<f64> {
        let mut cuts = vec![a];
        for c in pot.breakpoints() {
            if c > a && c < b {
                cuts.push(c);
            }
        }
        cuts.push(b);
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let n = cuts.len() as f64;
        let mut sum = 0.0;
        for pair in cuts.windows(2) {
            sum += adaptive_floor(&f, pair[0], pair[1], tol / n, scale_hint / n)?;
        }
        Ok(sum)
    };
    if let Some(se) = pot.support_end() {
        return split(0.0, se, rel_tol);
    }
    let start = window_start(pot, 0.0);
    let head = split(0.0, start, rel_tol * 0.25)?;
    let (tail, _) = improper(&f, start, rel_tol, scale_hint + head.abs())?;
    Ok(head + tail)
}

/// Smallest convenient radius `r_max` with
/// `∫_{r_max}^∞ r|V| dr < rel_tol · ∫_0^{r_max} r|V| dr`
/// (the support end when it is finite).
pub fn tail_radius(pot: &Potential, rel_tol: f64) -> Result<f64> {
    if let Some(se) = pot.support_end() {
        return Ok(se);
    }
    moment_tail_radius(pot, MomentKind::RAbsV, rel_tol)
}

/// Radius beyond which the remaining phase `∫ |V|^(1/2) dr` is below
/// `eps` in absolute terms; used to size the integration horizon of the
/// node counters.
pub fn phase_tail_radius(pot: &Potential, eps: f64) -> Result<f64> {
    if let Some(se) = pot.support_end() {
        return Ok(se);
    }
    let total = integrate(pot, IntegralSpec::full(MomentKind::SqrtAbsV), 1e-8)?;
    let rel = (eps / total.max(f64::MIN_POSITIVE)).min(0.1);
    moment_tail_radius(pot, MomentKind::SqrtAbsV, rel)
}

fn moment_tail_radius(pot: &Potential, kind: MomentKind, rel_tol: f64) -> Result<f64> {
    let start = window_start(pot, 0.0);
    let head = finite_moment(pot, kind, 0.0, start, rel_tol * 0.25)?;
    let (_, stop) = certified_windows(pot, kind, start, rel_tol, head)?;

    // Walk the certified stop radius back down: find the smallest radius
    // whose remainder (tail windows beyond it, which are already below
    // tolerance, plus the integral up to the stop) still satisfies the
    // defining inequality.
    let total = integrate(pot, IntegralSpec::full(kind), rel_tol * 0.25)?;
    let mut lo = start;
    let mut hi = stop;
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        let partial = finite_moment(pot, kind, 0.0, mid, rel_tol * 0.25)?;
        let remainder = (total - partial).max(0.0);
        if remainder < 0.5 * rel_tol * partial.max(f64::MIN_POSITIVE) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss-Kronrod 7-15 panel: returns `(kronrod, |kronrod - gauss|)`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kronrod = WGK[7] * f(c);
    let mut gauss = WG[3] * f(c);
    for i in 0..7 {
        let x = h * XGK[i];
        let pair = f(c - x) + f(c + x);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss-Kronrod integration of an arbitrary integrand on a
/// finite interval. This is the kernel under the moment API; the refined
/// limits also use it directly for their non-moment integrands.
pub fn adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    adaptive_floor(f, a, b, rel_tol, 0.0)
}

/// [`adaptive`] with an absolute scale floor: convergence is declared at
/// `rel_tol · max(|total|, scale_floor)`. A sign-changing integrand can
/// integrate to (numerical) zero, where a purely relative target is
/// unattainable; the floor supplies the natural scale that "zero" is
/// measured against.
pub(crate) fn adaptive_floor<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    scale_floor: f64,
) -> Result<f64> {
    if b <= a {
        return Ok(0.0);
    }
    struct Panel {
        a: f64,
        b: f64,
        value: f64,
        err: f64,
    }
    let (value, err) = gk15(&f, a, b);
    if !value.is_finite() {
        return Err(Error::QuadratureStalled {
            context: format!("integrand not finite on [{a}, {b}]"),
        });
    }
    let mut panels = vec![Panel { a, b, value, err }];
    for _ in 0..4000 {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err_sum: f64 = panels.iter().map(|p| p.err).sum();
        let target = total.abs().max(scale_floor).max(f64::MIN_POSITIVE);
        if err_sum <= rel_tol * target || err_sum == 0.0 {
            return Ok(total);
        }
        // Split the worst panel.
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let m = 0.5 * (a + b);
        for (lo, hi) in [(a, m), (m, b)] {
            let (value, err) = gk15(&f, lo, hi);
            if !value.is_finite() {
                return Err(Error::QuadratureStalled {
                    context: format!("integrand not finite on [{lo}, {hi}]"),
                });
            }
            panels.push(Panel {
                a: lo,
                b: hi,
                value,
                err,
            });
        }
    }
    Err(Error::QuadratureStalled {
        context: format!("panel budget exhausted on [{a}, {b}] at tolerance {rel_tol}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::Kind;

    const TOL: f64 = DEFAULT_REL_TOL;

    fn pot(kind: Kind, g: f64, r: f64, alpha: f64) -> Potential {
        Potential::builtin(kind, g, r, alpha).unwrap()
    }

    fn full(pot: &Potential, kind: MomentKind) -> f64 {
        integrate(pot, IntegralSpec::full(kind), TOL).unwrap()
    }

    fn check(value: f64, expected: f64, tol: f64) {
        assert!(
            (value - expected).abs() <= tol * expected.abs().max(1.0),
            "got {value}, expected {expected}"
        );
    }

    #[test]
    fn square_well_moments() {
        let v = pot(Kind::SquareWell, 10.0, 1.0, 1.0);
        check(full(&v, MomentKind::SqrtAbsV), 10.0, 1e-12);
        check(full(&v, MomentKind::AbsV), 100.0, 1e-12);
        check(full(&v, MomentKind::RAbsV), 50.0, 1e-12);
        check(full(&v, MomentKind::R2AbsV), 100.0 / 3.0, 1e-12);
    }

    #[test]
    fn poschl_teller_moments() {
        let v = pot(Kind::PoschlTeller, 3.0, 1.0, 1.0);
        let pi = std::f64::consts::PI;
        check(full(&v, MomentKind::SqrtAbsV), 3.0 * pi / 2.0, 1e-10);
        check(full(&v, MomentKind::AbsV), 9.0, 1e-10);
        check(full(&v, MomentKind::RAbsV), 9.0 * 2.0f64.ln(), 1e-10);
        check(full(&v, MomentKind::R2AbsV), 9.0 * pi * pi / 12.0, 1e-10);
    }

    #[test]
    fn exponential_moments_scale_with_r() {
        let v = pot(Kind::Exponential, 10.0, 2.0, 1.0);
        check(full(&v, MomentKind::SqrtAbsV), 2.0 * 10.0, 1e-10);
        check(full(&v, MomentKind::AbsV), 100.0 / 2.0, 1e-10);
        check(full(&v, MomentKind::RAbsV), 100.0, 1e-10);
        check(full(&v, MomentKind::R2AbsV), 2.0 * 100.0 * 2.0, 1e-10);
    }

    #[test]
    fn hulthen_moments() {
        let v = pot(Kind::Hulthen, 2.5, 1.0, 1.0);
        let pi = std::f64::consts::PI;
        // ∫ (e^r - 1)^(-1/2) dr = π and ∫ r/(e^r - 1) dr = π²/6.
        check(full(&v, MomentKind::SqrtAbsV), 2.5 * pi, 1e-10);
        check(full(&v, MomentKind::RAbsV), 6.25 * pi * pi / 6.0, 1e-10);
        // ∫|V| diverges at the origin...
        assert!(matches!(
            integrate(&v, IntegralSpec::full(MomentKind::AbsV), TOL),
            Err(Error::Unsupported(_))
        ));
        // ...but converges away from it: ∫_1^∞ dr/(e^r - 1) = -ln(1 - e^(-1)).
        let from_one = integrate(
            &v,
            IntegralSpec::over(MomentKind::AbsV, 1.0, f64::INFINITY),
            TOL,
        )
        .unwrap();
        check(from_one, -6.25 * (-(-1.0f64).exp()).ln_1p(), 1e-10);
    }

    #[test]
    fn hulthen_partial_sqrt_moment_near_origin() {
        let v = pot(Kind::Hulthen, 2.5, 1.0, 1.0);
        // ∫_0^x (e^r - 1)^(-1/2) dr = 2 arctan sqrt(e^x - 1)
        let part = integrate(&v, IntegralSpec::over(MomentKind::SqrtAbsV, 0.0, 0.01), TOL).unwrap();
        let expected = 2.5 * 2.0 * 0.01f64.exp_m1().sqrt().atan();
        check(part, expected, 1e-10);
    }

    #[test]
    fn yukawa_moments() {
        let v = pot(Kind::Yukawa, 5.0, 2.0, 1.0);
        let two_pi = 2.0 * std::f64::consts::PI;
        check(full(&v, MomentKind::SqrtAbsV), 5.0 * two_pi.sqrt(), 1e-10);
        check(full(&v, MomentKind::RAbsV), 25.0, 1e-10);
        check(full(&v, MomentKind::R2AbsV), 50.0, 1e-10);
        assert!(integrate(&v, IntegralSpec::full(MomentKind::AbsV), TOL).is_err());
    }

    #[test]
    fn inverse_square_moments() {
        let v = pot(Kind::InverseSquare, 10.0, 1.0, 1.0);
        let ln2 = 2.0f64.ln();
        check(full(&v, MomentKind::SqrtAbsV), 10.0 * ln2, 1e-12);
        check(full(&v, MomentKind::AbsV), 50.0, 1e-12);
        check(full(&v, MomentKind::RAbsV), 100.0 * (ln2 - 0.5), 1e-11);
        check(full(&v, MomentKind::R2AbsV), 100.0 * (1.5 - 2.0 * ln2), 1e-11);
    }

    #[test]
    fn tabulated_square_well_matches_builtin() {
        let table =
            Potential::from_table(&[(0.0, -100.0), (1.0, -100.0), (1.0, 0.0)]).unwrap();
        let builtin = pot(Kind::SquareWell, 10.0, 1.0, 1.0);
        for kind in [
            MomentKind::SqrtAbsV,
            MomentKind::AbsV,
            MomentKind::RAbsV,
            MomentKind::R2AbsV,
        ] {
            check(full(&table, kind), full(&builtin, kind), 1e-11);
        }
    }

    #[test]
    fn kg_reduced_bargmann_moment() {
        let w = pot(Kind::Exponential, 2.0, 1.0, 1.0);
        let v = Potential::kg_reduce(w, 1.0).unwrap();
        // ∫ r (8 e^-r + 16 e^-2r) dr = 8 + 4
        check(full(&v, MomentKind::RAbsV), 12.0, 1e-10);
    }

    #[test]
    fn interval_additivity() {
        let v = pot(Kind::PoschlTeller, 4.0, 1.3, 1.0);
        for kind in [MomentKind::SqrtAbsV, MomentKind::RAbsV] {
            let whole = integrate(&v, IntegralSpec::over(kind, 0.2, 9.0), TOL).unwrap();
            let left = integrate(&v, IntegralSpec::over(kind, 0.2, 2.7), TOL).unwrap();
            let right = integrate(&v, IntegralSpec::over(kind, 2.7, 9.0), TOL).unwrap();
            check(left + right, whole, 1e-9);
        }
    }

    #[test]
    fn tail_radius_certifies_the_remainder() {
        let v = pot(Kind::Yukawa, 5.0, 1.0, 1.0);
        let r_max = tail_radius(&v, 1e-10).unwrap();
        assert!((15.0..45.0).contains(&r_max), "r_max = {r_max}");
        // Analytic check: ∫_a^∞ r|V| dr = g² e^(-a) and
        // ∫_0^a = g²(1 - e^(-a)).
        let tail = 25.0 * (-r_max).exp();
        let partial = 25.0 * (1.0 - (-r_max).exp());
        assert!(tail < 1e-10 * partial);
        // Compact support short-circuits.
        let sw = pot(Kind::SquareWell, 10.0, 1.0, 1.0);
        assert_eq!(tail_radius(&sw, 1e-10).unwrap(), 1.0);
    }

    #[test]
    fn phase_tail_radius_bounds_remaining_phase() {
        let v = pot(Kind::Exponential, 10.0, 1.0, 1.0);
        let r = phase_tail_radius(&v, 1e-6).unwrap();
        // Remaining phase = 2 g e^(-r/2) must be below the requested eps.
        assert!(2.0 * 10.0 * (-r / 2.0).exp() < 1e-6, "r = {r}");
    }

    #[test]
    fn rejects_bad_requests() {
        let v = pot(Kind::SquareWell, 1.0, 1.0, 1.0);
        assert!(integrate(&v, IntegralSpec::over(MomentKind::AbsV, -1.0, 2.0), TOL).is_err());
        assert!(integrate(&v, IntegralSpec::over(MomentKind::AbsV, 2.0, 1.0), TOL).is_err());
        assert!(integrate(&v, IntegralSpec::full(MomentKind::AbsV), 2.0).is_err());
    }

    #[test]
    fn kernel_handles_smooth_reference_integrals() {
        // ∫_0^π sin = 2 and ∫_0^1 4/(1+x²) = π.
        let s = adaptive(f64::sin, 0.0, std::f64::consts::PI, 1e-12).unwrap();
        check(s, 2.0, 1e-12);
        let p = adaptive(|x| 4.0 / (1.0 + x * x), 0.0, 1.0, 1e-12).unwrap();
        check(p, std::f64::consts::PI, 1e-12);
    }
}
