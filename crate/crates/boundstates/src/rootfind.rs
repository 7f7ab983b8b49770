//! Auxiliary radii and optimal scales.
//!
//! Every limit in this crate is parametrised by one or two radii that solve
//! a scalar equation built from the potential. With `S = ∫₀^∞ |V|^(1/2) dr`
//! the equations are
//!
//! ```text
//! p :   ∫₀^p |V|^(1/2) dr = π/2        (inner half-wave radius)
//! q :   ∫_q^∞ |V|^(1/2) dr = π/2       (outer half-wave radius)
//! ρ :   ρ |V(ρ)| = ∫_ρ^∞ |V| dr        (tail-balance radius)
//! s :   V'(s) = 4 |V(s)|^(3/2)         (depth-slope stationary radii)
//! t :   t = ∫₀^t r² |V| dr             (smallest positive fixed point)
//! a* :  ∫₀^a r² |V| dr = a² ∫_a^∞ |V| dr
//! a° :  ∫₀^∞ |V| (1 - a²|V|) (1 + a²|V|)^(-2) dr = 0
//! ```
//!
//! `p` and `q` exist only when `S ≥ π/2` (otherwise the potential cannot
//! accumulate a half wave and supports no bound state). `ρ`, `a*` and `a°`
//! always exist for an admissible attractive potential; when an equation has
//! several roots the solver returns the one that makes the associated limit
//! sharpest. `s` and `t` may genuinely have no root.
//!
//! `a*` and `a°` are the scales at which the two one-state sufficient
//! conditions
//!
//! ```text
//! (1/a) ∫₀^a r² |V| dr + a ∫_a^∞ |V| dr > 1      (split condition)
//! a ∫₀^∞ |V| (1 + a²|V|)^(-1) dr > 1            (rational condition)
//! ```
//!
//! are stationary in `a`, i.e. where each condition tests best.
//!
//! All solvers bracket the root on a log-spaced scan grid and polish by
//! bisection; integrals come from [`crate::quadrature`].

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::potential::Potential;
use crate::quadrature::{integral_of, integrate, tail_radius, IntegralSpec, MomentKind};

/// The radii and scales consumed by the limit formulas, computed once.
#[derive(Clone, Debug)]
pub struct AuxiliaryRadii {
    /// `S = ∫₀^∞ |V|^(1/2) dr`.
    pub half_phase: f64,
    /// Inner half-wave radius; `None` when `S < π/2`.
    pub p: Option<f64>,
    /// Outer half-wave radius; `None` when `S < π/2`.
    pub q: Option<f64>,
    /// Tail-balance radius.
    pub rho: f64,
    /// All depth-slope stationary radii, ascending (possibly empty).
    pub s_roots: Vec<f64>,
    /// Smallest positive fixed point of `t = ∫₀^t r²|V| dr`, if any.
    pub t: Option<f64>,
    /// Scale balancing the inner `r²` moment against the outer moment.
    pub a_split: f64,
    /// Zero of the rational-weight integral.
    pub a_rational: f64,
}

impl AuxiliaryRadii {
    /// Solves every auxiliary equation for `pot`.
    pub fn compute(pot: &Potential, rel_tol: f64) -> Result<Self> {
        let half_phase = integrate(pot, IntegralSpec::full(MomentKind::SqrtAbsV), rel_tol)?;
        let (p, q) = if half_phase < FRAC_PI_2 * (1.0 - 1e-12) {
            (None, None)
        } else {
            (Some(solve_p(pot, rel_tol)?), Some(solve_q(pot, rel_tol)?))
        };
        Ok(AuxiliaryRadii {
            half_phase,
            p,
            q,
            rho: solve_rho(pot, rel_tol)?,
            s_roots: solve_s(pot, rel_tol)?,
            t: solve_t(pot, rel_tol)?,
            a_split: solve_a_split(pot, rel_tol)?,
            a_rational: solve_a_rational(pot, rel_tol)?,
        })
    }

    /// The largest depth-slope stationary radius, if any.
    pub fn s(&self) -> Option<f64> {
        self.s_roots.last().copied()
    }
}

/// Inner half-wave radius: `∫₀^p |V|^(1/2) dr = π/2`.
///
/// Errors with [`Error::BelowOneStateThreshold`] when the full integral
/// falls short of `π/2`.
pub fn solve_p(pot: &Potential, rel_tol: f64) -> Result<f64> {
    let total = integrate(pot, IntegralSpec::full(MomentKind::SqrtAbsV), rel_tol)?;
    if total < FRAC_PI_2 * (1.0 - 1e-12) {
        return Err(Error::BelowOneStateThreshold { total });
    }
    let head = |x: f64| -> Result<f64> {
        integrate(pot, IntegralSpec::over(MomentKind::SqrtAbsV, 0.0, x), rel_tol)
    };
    // Find an upper bracket: a radius whose head integral reaches π/2.
    let mut hi = match pot.support_end() {
        Some(se) => se,
        None => {
            let mut r = pot.r_scale();
            for _ in 0..64 {
                if head(r)? >= FRAC_PI_2 {
                    break;
                }
                r *= 2.0;
            }
            r
        }
    };
    let fhi = head(hi)? - FRAC_PI_2;
    if fhi <= 0.0 {
        // Marginal case: the full integral barely clears π/2 and quadrature
        // noise hides the crossing; the bracket endpoint is the radius.
        return Ok(hi);
    }
    let mut lo = 0.0;
    let mut flo = -FRAC_PI_2;
    // Tighten the lower bracket cheaply before bisecting on integrals.
    for k in 1..8 {
        let x = hi * (k as f64) / 8.0;
        let fx = head(x)? - FRAC_PI_2;
        if fx < 0.0 {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            break;
        }
    }
    bisect(|x| Ok(head(x)? - FRAC_PI_2), lo, hi, flo, 1e-13)
}

/// Outer half-wave radius: `∫_q^∞ |V|^(1/2) dr = π/2`.
pub fn solve_q(pot: &Potential, rel_tol: f64) -> Result<f64> {
    let total = integrate(pot, IntegralSpec::full(MomentKind::SqrtAbsV), rel_tol)?;
    if total < FRAC_PI_2 * (1.0 - 1e-12) {
        return Err(Error::BelowOneStateThreshold { total });
    }
    let tail = |x: f64| -> Result<f64> {
        integrate(
            pot,
            IntegralSpec::over(MomentKind::SqrtAbsV, x, f64::INFINITY),
            rel_tol,
        )
    };
    let flo = total - FRAC_PI_2;
    if flo <= 0.0 {
        return Ok(0.0);
    }
    let mut hi = match pot.support_end() {
        Some(se) => se,
        None => {
            let mut r = pot.r_scale();
            for _ in 0..64 {
                if tail(r)? < FRAC_PI_2 {
                    break;
                }
                r *= 2.0;
            }
            r
        }
    };
    let mut fhi = tail(hi)? - FRAC_PI_2;
    if fhi > 0.0 {
        // Compact support with the last half wave ending exactly at the
        // edge; same marginal treatment as in `solve_p`.
        return Ok(hi);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    let mut lo = 0.0;
    for k in (1..8).rev() {
        let x = hi * (k as f64) / 8.0;
        let fx = tail(x)? - FRAC_PI_2;
        if fx < 0.0 {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            break;
        }
    }
    let _ = fhi;
    bisect(
        |x| Ok(tail(x)? - FRAC_PI_2),
        lo,
        hi,
        tail(lo)? - FRAC_PI_2,
        1e-13,
    )
}

/// Tail-balance radius: `ρ |V(ρ)| = ∫_ρ^∞ |V| dr`.
///
/// When the balance equation has several roots, returns the one that
/// maximises `ρ² |V(ρ)|`, i.e. that makes the lower limit built on it
/// sharpest.
pub fn solve_rho(pot: &Potential, rel_tol: f64) -> Result<f64> {
    let scale = pot.r_scale();
    let hi = match pot.support_end() {
        Some(se) => se,
        None => tail_radius(pot, 1e-9)?,
    };
    let lo = 1e-7 * scale;
    let mut f = |x: f64| -> Result<f64> {
        let outer = integrate(
            pot,
            IntegralSpec::over(MomentKind::AbsV, x, f64::INFINITY),
            rel_tol,
        )?;
        Ok(outer - x * depth(pot, x))
    };
    for n in [256usize, 2048] {
        let roots = scan_roots(&mut f, lo, hi, n, 1e-13)?;
        if let Some(best) = roots
            .into_iter()
            .max_by(|a, b| (a * a * depth(pot, *a)).total_cmp(&(b * b * depth(pot, *b))))
        {
            return Ok(best);
        }
    }
    Err(Error::NoBracket {
        context: format!("tail-balance radius in [{lo:e}, {hi:e}]"),
    })
}

/// All solutions of `V'(s) = 4 |V(s)|^(3/2)`, ascending.
///
/// The list may be empty (e.g. a flat well, whose derivative vanishes
/// inside the support) and is filtered against spurious sign changes at
/// jump discontinuities by checking the residual at the converged point.
pub fn solve_s(pot: &Potential, _rel_tol: f64) -> Result<Vec<f64>> {
    let scale = pot.r_scale();
    let hi = match pot.support_end() {
        Some(se) => se * (1.0 - 1e-9),
        None => 4.0 * tail_radius(pot, 1e-9)?,
    };
    let lo = 1e-7 * scale;
    // Snap rounding noise to an exact zero: a marginally coupled
    // inverse-square well satisfies the equation identically, and the
    // ±1 ulp residue it leaves must not read as sign changes.
    let residual = |x: f64| {
        let slope = pot.deriv(x);
        let cube = 4.0 * depth(pot, x).powf(1.5);
        let h = slope - cube;
        if h.abs() <= 1e-12 * (slope.abs() + cube) {
            0.0
        } else {
            h
        }
    };
    let mut f = |x: f64| -> Result<f64> { Ok(residual(x)) };
    let mut roots = scan_roots(&mut f, lo, hi, 2048, 1e-13)?;
    roots.retain(|&s| {
        let parts = pot.deriv(s).abs() + 4.0 * depth(pot, s).powf(1.5);
        residual(s).abs() <= 1e-6 * parts + f64::MIN_POSITIVE
    });
    Ok(roots)
}

/// Smallest positive fixed point of `t = ∫₀^t r² |V| dr`, if one exists.
pub fn solve_t(pot: &Potential, rel_tol: f64) -> Result<Option<f64>> {
    let scale = pot.r_scale();
    let hi = match pot.support_end() {
        Some(se) => se,
        None => 4.0 * tail_radius(pot, 1e-9)?,
    };
    let mut f = |x: f64| -> Result<f64> {
        let inner = integrate(pot, IntegralSpec::over(MomentKind::R2AbsV, 0.0, x), rel_tol)?;
        Ok(x - inner)
    };
    // Start where the fixed-point map is still below the identity
    // (∫₀^t r²|V| = O(t²) near the origin, so small enough t always works).
    let mut lo = 1e-9 * scale;
    for _ in 0..8 {
        if f(lo)? > 0.0 {
            break;
        }
        lo *= 1e-3;
    }
    if f(lo)? <= 0.0 {
        return Err(Error::NoBracket {
            context: "no positive start for the r²-moment fixed point".into(),
        });
    }
    for n in [256usize, 2048] {
        let roots = scan_roots(&mut f, lo, hi, n, 1e-13)?;
        if let Some(first) = roots.into_iter().next() {
            return Ok(Some(first));
        }
    }
    Ok(None)
}

/// Scale balancing the inner `r²` moment against the outer moment:
/// `∫₀^a r²|V| dr = a² ∫_a^∞ |V| dr`.
///
/// Ties between several roots go to the one with the largest split
/// condition value ([`split_condition`]).
pub fn solve_a_split(pot: &Potential, rel_tol: f64) -> Result<f64> {
    let scale = pot.r_scale();
    let hi = match pot.support_end() {
        Some(se) => se,
        None => 4.0 * tail_radius(pot, 1e-9)?,
    };
    let lo = 1e-7 * scale;
    let mut f = |a: f64| -> Result<f64> {
        let inner = integrate(pot, IntegralSpec::over(MomentKind::R2AbsV, 0.0, a), rel_tol)?;
        let outer = integrate(
            pot,
            IntegralSpec::over(MomentKind::AbsV, a, f64::INFINITY),
            rel_tol,
        )?;
        Ok(inner - a * a * outer)
    };
    for n in [256usize, 2048] {
        let roots = scan_roots(&mut f, lo, hi, n, 1e-13)?;
        let mut best: Option<(f64, f64)> = None;
        for a in roots {
            let merit = split_condition(pot, a, rel_tol)?;
            if best.map_or(true, |(_, m)| merit > m) {
                best = Some((a, merit));
            }
        }
        if let Some((a, _)) = best {
            return Ok(a);
        }
    }
    Err(Error::NoBracket {
        context: format!("split balance scale in [{lo:e}, {hi:e}]"),
    })
}

/// Zero of `∫₀^∞ |V| (1 - a²|V|) (1 + a²|V|)^(-2) dr` in `a`.
///
/// This integral is the derivative in `a` of the rational condition value
/// ([`rational_condition`]), so its zeros are the stationary scales of that
/// condition; ties go to the root with the largest condition value.
pub fn solve_a_rational(pot: &Potential, rel_tol: f64) -> Result<f64> {
    let scale = pot.r_scale();
    let mut f = |a: f64| -> Result<f64> {
        let positive = integral_of(pot, |r| saturating_kernel(a, depth(pot, r)), rel_tol, 0.0)?;
        integral_of(
            pot,
            |r| rational_kernel(a, depth(pot, r)),
            rel_tol,
            positive,
        )
    };
    for n in [192usize, 1024] {
        let roots = scan_roots(&mut f, 1e-8 * scale, 1e4 * scale, n, 1e-13)?;
        let mut best: Option<(f64, f64)> = None;
        for a in roots {
            let merit = rational_condition(pot, a, rel_tol)?;
            if best.map_or(true, |(_, m)| merit > m) {
                best = Some((a, merit));
            }
        }
        if let Some((a, _)) = best {
            return Ok(a);
        }
    }
    Err(Error::NoBracket {
        context: "rational weight scale in [1e-8, 1e4] × r_scale".into(),
    })
}

/// Split condition value `(1/a) ∫₀^a r²|V| dr + a ∫_a^∞ |V| dr`.
///
/// A potential supports at least one bound state when this exceeds 1 at
/// some `a > 0`; it tests best at [`solve_a_split`].
pub fn split_condition(pot: &Potential, a: f64, rel_tol: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "split condition scale must be positive and finite, got {a}"
        )));
    }
    let inner = integrate(pot, IntegralSpec::over(MomentKind::R2AbsV, 0.0, a), rel_tol)?;
    let outer = integrate(
        pot,
        IntegralSpec::over(MomentKind::AbsV, a, f64::INFINITY),
        rel_tol,
    )?;
    Ok(inner / a + a * outer)
}

/// Rational condition value `a ∫₀^∞ |V| (1 + a²|V|)^(-1) dr`.
///
/// A potential supports at least one bound state when this exceeds 1 at
/// some `a > 0`; it is stationary at the zeros found by
/// [`solve_a_rational`]. The saturating weight keeps the integrand bounded
/// by `1/a²` even for a `-1/r` origin.
pub fn rational_condition(pot: &Potential, a: f64, rel_tol: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "rational condition scale must be positive and finite, got {a}"
        )));
    }
    let value = integral_of(pot, |r| saturating_kernel(a, depth(pot, r)), rel_tol, 0.0)?;
    Ok(a * value)
}

fn depth(pot: &Potential, r: f64) -> f64 {
    (-pot.eval(r)).max(0.0)
}

/// `x / (1 + a²x)`, evaluated stably for `x → ∞` (limit `1/a²`).
fn saturating_kernel(a: f64, x: f64) -> f64 {
    let t = a * a * x;
    if !t.is_finite() {
        return 1.0 / (a * a);
    }
    x / (1.0 + t)
}

/// `x (1 - a²x) / (1 + a²x)²`, evaluated stably for `x → ∞` (limit `-1/a²`).
fn rational_kernel(a: f64, x: f64) -> f64 {
    let t = a * a * x;
    if !t.is_finite() {
        return -1.0 / (a * a);
    }
    (x / (1.0 + t)) * ((1.0 - t) / (1.0 + t))
}

/// Bisection on a sign-changing interval. `flo` is `f(lo)` (the caller
/// usually has it already); iterates until the interval shrinks below
/// `rel_tol` relatively or 200 steps, whichever comes first.
pub(crate) fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, flo: f64, rel_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if flo == 0.0 {
        return Ok(lo);
    }
    let mut sign_lo = flo > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if !fm.is_finite() {
            return Err(Error::NoBracket {
                context: format!("non-finite residual at r = {mid}"),
            });
        }
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == sign_lo {
            lo = mid;
            sign_lo = fm > 0.0;
        } else {
            hi = mid;
        }
        if hi - lo <= rel_tol * hi.abs().max(lo.abs()) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Brackets every sign change of `f` on a log-spaced grid over `[lo, hi]`
/// and polishes each by bisection. Grid points where `f` is exactly zero
/// carry no sign information (e.g. an underflowed tail) and are skipped;
/// a genuine crossing is still caught between its nonzero neighbours.
fn scan_roots<F>(f: &mut F, lo: f64, hi: f64, n: usize, rel_tol: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::InvalidParameter(format!(
            "scan interval [{lo}, {hi}] is not positive and increasing"
        )));
    }
    let ratio = (hi / lo).ln() / (n as f64 - 1.0);
    let mut roots = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for i in 0..n {
        let x = if i + 1 == n {
            hi
        } else {
            lo * ((i as f64) * ratio).exp()
        };
        let fx = f(x)?;
        if !fx.is_finite() {
            return Err(Error::NoBracket {
                context: format!("non-finite scan value at r = {x}"),
            });
        }
        if fx == 0.0 {
            continue;
        }
        if let Some((px, pf)) = last {
            if (pf > 0.0) != (fx > 0.0) {
                roots.push(bisect(&mut *f, px, x, pf, rel_tol)?);
            }
        }
        last = Some((x, fx));
    }
    Ok(roots)
}
