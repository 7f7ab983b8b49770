//! Aggregated bound-state reports, coupling sweeps, and the reference
//! table for the shifted inverse-square well.
//!
//! A [`BoundsReport`] runs the exact counter plus every applicable limit
//! on one potential and cross-checks them: any bound that contradicts the
//! exact count marks the report with [`BoundsReport::sandwich_violation`]
//! — that can only ever mean a numerical or logic bug, never physics.
//!
//! Rendering is deterministic: fixed column layout, raw values printed to
//! six significant digits with locale-independent decimal points, so
//! identical inputs produce byte-identical output.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::counter::{count_states, CountResult};
use crate::error::{Error, Result};
use crate::limits::classic::{self, OneStateCheck};
use crate::limits::ladder::{self, LadderTrace};
use crate::limits::phase;
use crate::limits::{Direction, LimitName, LimitValue};
use crate::potential::{Kind, Potential};
use crate::quadrature::DEFAULT_REL_TOL;
use crate::rootfind::AuxiliaryRadii;

/// The (α, g) pairs of the reference table for the shifted
/// inverse-square well.
pub const REFERENCE_TABLE_PAIRS: [(f64, f64); 9] = [
    (1.0, 10.0),
    (1.0, 100.0),
    (1.0, 1000.0),
    (100.0, 10.0),
    (100.0, 100.0),
    (10_000.0, 10.0),
    (10_000.0, 100.0),
    (1_000_000.0, 10.0),
    (1_000_000.0, 100.0),
];

/// Output style for rendered reports and row sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// Aligned human-readable table (the default).
    Table,
    /// Comma-separated values with a single header row.
    Csv,
    /// `key = value` lines, one datum per line.
    Machine,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "machine" => Ok(OutputFormat::Machine),
            other => Err(Error::InvalidParameter(format!(
                "unknown output format `{other}` (expected table, csv, or machine)"
            ))),
        }
    }
}

/// Everything the library can say about one potential: the exact count,
/// every applicable limit, the auxiliary radii behind them, one-bound-state
/// sufficiency checks, and consistency warnings.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    /// Human-readable description of the potential.
    pub descriptor: String,
    /// Exact node count from the phase integrator.
    pub exact: CountResult,
    /// Evaluated limits in canonical order (uppers first).
    pub limits: Vec<LimitValue>,
    /// Auxiliary radii shared by the limit evaluators.
    pub radii: AuxiliaryRadii,
    /// One-bound-state sufficiency conditions.
    pub one_state: OneStateCheck,
    /// Rung traces of the half-wave ladders, where applicable.
    pub ladder_up_trace: Option<LadderTrace>,
    pub ladder_down_trace: Option<LadderTrace>,
    /// Inapplicable limits, marginal integerizations, boundary cases.
    pub warnings: Vec<String>,
    /// True when some bound contradicts the exact count (always a bug).
    pub sandwich_violation: bool,
    /// Wall-clock spent in (counting, radii + limits).
    pub timings: (Duration, Duration),
}

impl BoundsReport {
    /// Run the full pipeline on one potential. The exact count uses a
    /// tolerance two decades tighter than the limit integrals so that the
    /// arbiter is always more accurate than the bounds it checks.
    pub fn compute(pot: &Potential, rel_tol: f64) -> Result<BoundsReport> {
        let t0 = Instant::now();
        let count_tol = (rel_tol * 1e-2).max(1e-13);
        let exact = count_states(pot, count_tol)?;
        let t_count = t0.elapsed();

        let t1 = Instant::now();
        let radii = AuxiliaryRadii::compute(pot, rel_tol)?;
        let mut limits = Vec::new();
        let mut warnings = Vec::new();
        let mut ladder_up_trace = None;
        let mut ladder_down_trace = None;

        for name in LimitName::ALL {
            let evaluated = match name {
                LimitName::MomentUpper => classic::moment_upper(pot, rel_tol).map(Some),
                LimitName::HalfWaveUpper => classic::half_wave_upper(pot, rel_tol).map(Some),
                LimitName::MixedMomentUpper => classic::mixed_moment_upper(pot, rel_tol).map(Some),
                LimitName::TailBalanceLower => Ok(Some(classic::tail_balance_lower(pot, &radii))),
                LimitName::DepthScaledLower => classic::depth_scaled_lower(pot, rel_tol).map(Some),
                LimitName::PhaseUpper => phase::phase_upper(pot, &radii).map(Some),
                LimitName::PhaseUpperRegular => phase::phase_upper_regular(pot, &radii).map(Some),
                LimitName::PhaseLowerRegular => phase::phase_lower_regular(pot, &radii).map(Some),
                LimitName::PhaseLowerStationary => {
                    phase::phase_lower_stationary(pot, &radii, rel_tol).map(Some)
                }
                LimitName::PhaseLowerSingular => phase::phase_lower_singular(pot, &radii).map(Some),
                LimitName::PhaseLowerWindow => {
                    phase::phase_lower_window(pot, &radii, rel_tol).map(Some)
                }
                LimitName::LadderUpper => ladder::ladder_upper(pot, &radii).map(|b| {
                    ladder_up_trace = b.trace;
                    Some(b.value)
                }),
                LimitName::LadderLower => ladder::ladder_lower(pot, &radii).map(|b| {
                    ladder_down_trace = b.trace;
                    Some(b.value)
                }),
            };
            match evaluated {
                Ok(Some(value)) => {
                    if value.marginal {
                        warnings.push(format!(
                            "{name}: raw value {:.12} sits on an integer boundary",
                            value.raw
                        ));
                    }
                    limits.push(value);
                }
                Ok(None) => {}
                Err(Error::Unsupported(reason)) => {
                    warnings.push(format!("{name}: not applicable ({reason})"));
                }
                Err(other) => return Err(other),
            }
        }

        let one_state = OneStateCheck::compute(pot, &radii, rel_tol)?;
        let t_limits = t1.elapsed();

        let mut sandwich_violation = false;
        for value in &limits {
            if !value.admits(exact.count) {
                sandwich_violation = true;
                warnings.push(format!(
                    "{}: bound {} contradicts exact count {} — numerical bug",
                    value.name, value.bound, exact.count
                ));
            }
        }
        if exact.marginal {
            warnings.push(format!(
                "exact count sits within {:e} of a threshold; a marginally bound state may \
                 appear or vanish under perturbation",
                crate::counter::MARGIN
            ));
        }

        Ok(BoundsReport {
            descriptor: pot.to_string(),
            exact,
            limits,
            radii,
            one_state,
            ladder_up_trace,
            ladder_down_trace,
            warnings,
            sandwich_violation,
            timings: (t_count, t_limits),
        })
    }

    /// The evaluated value of one limit, if it was applicable.
    pub fn limit(&self, name: LimitName) -> Option<&LimitValue> {
        self.limits.iter().find(|v| v.name == name)
    }

    /// Tightest integer window [lo, hi] implied by the evaluated limits.
    pub fn tightest_window(&self) -> (usize, Option<usize>) {
        let mut lo = 0usize;
        let mut hi = None;
        for v in &self.limits {
            match v.direction() {
                Direction::Lower => lo = lo.max(v.bound),
                Direction::Upper => hi = Some(hi.map_or(v.bound, |h: usize| h.min(v.bound))),
            }
        }
        (lo, hi)
    }
}

/// One row of a coupling sweep: the exact count plus every applicable
/// limit at a single g.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub g: f64,
    pub exact: usize,
    /// Aligned with [`LimitName::ALL`]; `None` where inapplicable.
    pub values: Vec<Option<LimitValue>>,
}

/// Evaluate the exact count and all limits over a grid of couplings.
/// Rows are computed in parallel and returned in grid order.
pub fn sweep(kind: Kind, alpha: f64, r_scale: f64, grid: &[f64], rel_tol: f64) -> Result<Vec<SweepRow>> {
    grid.par_iter()
        .map(|&g| {
            let pot = Potential::builtin(kind, g, r_scale, alpha)?;
            let report = BoundsReport::compute(&pot, rel_tol)?;
            if report.sandwich_violation {
                return Err(Error::SandwichViolation);
            }
            let values = LimitName::ALL
                .iter()
                .map(|&name| report.limit(name).copied())
                .collect();
            Ok(SweepRow { g, exact: report.exact.count, values })
        })
        .collect()
}

/// Evenly spaced grid of `steps + 1` couplings covering [g_min, g_max].
pub fn coupling_grid(g_min: f64, g_max: f64, steps: usize) -> Vec<f64> {
    let steps = steps.max(1);
    (0..=steps)
        .map(|i| g_min + (g_max - g_min) * i as f64 / steps as f64)
        .collect()
}

/// Compute the nine reference-table rows for the shifted inverse-square
/// well from scratch (numeric pipeline, no closed forms).
pub fn reference_table(rel_tol: f64) -> Result<Vec<BoundsReport>> {
    REFERENCE_TABLE_PAIRS
        .par_iter()
        .map(|&(alpha, g)| {
            let pot = Potential::builtin(Kind::InverseSquare, g, 1.0, alpha)?;
            BoundsReport::compute(&pot, rel_tol)
        })
        .collect()
}

/// Default tolerance, overridable through the `NBOUND_REL_TOL`
/// environment variable.
pub fn tolerance_from_env() -> Result<f64> {
    match std::env::var("NBOUND_REL_TOL") {
        Ok(raw) => {
            let tol: f64 = raw.parse().map_err(|_| {
                Error::InvalidParameter(format!("NBOUND_REL_TOL=`{raw}` is not a number"))
            })?;
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "NBOUND_REL_TOL must lie in (0, 1), got {tol}"
                )));
            }
            Ok(tol)
        }
        Err(_) => Ok(DEFAULT_REL_TOL),
    }
}

/// Format a value to six significant digits in plain decimal notation
/// (scientific only when the magnitude forces it), with a `.` decimal
/// point regardless of locale.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..15).contains(&mag) {
        let decimals = (5 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

fn limit_cell(v: Option<&LimitValue>) -> String {
    match v {
        Some(v) => format!("{} [{}]", sig6(v.raw), v.bound),
        None => "-".to_string(),
    }
}

/// Render a single-potential report.
pub fn render_report(report: &BoundsReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_report_table(report),
        OutputFormat::Csv => render_report_csv(report),
        OutputFormat::Machine => render_report_machine(report),
    }
}

fn render_report_table(report: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "potential: {}", report.descriptor);
    let _ = writeln!(
        out,
        "exact count: {}{}",
        report.exact.count,
        if report.exact.marginal { " (marginal)" } else { "" }
    );
    let _ = writeln!(out, "total phase / pi: {}", sig6(report.exact.phase / std::f64::consts::PI));
    let (lo, hi) = report.tightest_window();
    match hi {
        Some(hi) => {
            let _ = writeln!(out, "tightest window: [{lo}, {hi}]");
        }
        None => {
            let _ = writeln!(out, "tightest window: [{lo}, inf)");
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<24} {:>6} {:>14} {:>7}", "limit", "side", "raw", "bound");
    for v in &report.limits {
        let side = match v.direction() {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        };
        let _ = writeln!(
            out,
            "{:<24} {:>6} {:>14} {:>7}{}",
            v.name.label(),
            side,
            sig6(v.raw),
            v.bound,
            if v.marginal { " *" } else { "" }
        );
    }
    let _ = writeln!(out);
    let os = &report.one_state;
    let _ = writeln!(
        out,
        "one-state checks: tail-balance {} | depth-scaled {} | split-moment {} | saturated-moment {}",
        one_state_cell(Some(os.tail_balance), os.tail_balance_sufficient()),
        one_state_cell(os.depth_scaled, os.depth_scaled_sufficient()),
        one_state_cell(Some(os.split_moment), os.split_sufficient()),
        one_state_cell(Some(os.saturated_moment), os.saturated_sufficient()),
    );
    let _ = writeln!(
        out,
        "certifies at least one bound state: {}",
        if os.certifies() { "yes" } else { "no" }
    );
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

fn one_state_cell(value: Option<f64>, sufficient: bool) -> String {
    match value {
        Some(v) => format!("{} ({})", sig6(v), if sufficient { "yes" } else { "no" }),
        None => "- (no)".to_string(),
    }
}

fn render_report_csv(report: &BoundsReport) -> String {
    let mut out = String::from("limit,side,raw,bound,marginal\n");
    let _ = writeln!(out, "exact,,,{},{}", report.exact.count, report.exact.marginal);
    for v in &report.limits {
        let side = match v.direction() {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        };
        let _ = writeln!(out, "{},{},{},{},{}", v.name.label(), side, sig6(v.raw), v.bound, v.marginal);
    }
    out
}

fn render_report_machine(report: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "potential = {}", report.descriptor);
    let _ = writeln!(out, "exact.count = {}", report.exact.count);
    let _ = writeln!(out, "exact.phase = {}", sig6(report.exact.phase));
    let _ = writeln!(out, "exact.marginal = {}", report.exact.marginal);
    for v in &report.limits {
        let _ = writeln!(out, "{}.raw = {}", v.name.label(), sig6(v.raw));
        let _ = writeln!(out, "{}.bound = {}", v.name.label(), v.bound);
    }
    let _ = writeln!(out, "sandwich_violation = {}", report.sandwich_violation);
    for w in &report.warnings {
        let _ = writeln!(out, "warning = {w}");
    }
    out
}

/// Render sweep rows. The CSV form is the figure-data format: one header
/// row, then `g`, the exact count, and a raw/bound column pair per limit.
pub fn render_sweep(rows: &[SweepRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv | OutputFormat::Machine => render_sweep_csv(rows),
        OutputFormat::Table => render_sweep_table(rows),
    }
}

fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("g,exact");
    for name in LimitName::ALL {
        let _ = write!(out, ",{}_raw,{}_bound", name.label(), name.label());
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{},{}", sig6(row.g), row.exact);
        for v in &row.values {
            match v {
                Some(v) => {
                    let _ = write!(out, ",{},{}", sig6(v.raw), v.bound);
                }
                None => out.push_str(",,"),
            }
        }
        out.push('\n');
    }
    out
}

fn render_sweep_table(rows: &[SweepRow]) -> String {
    let mut out = format!("{:>10} {:>6}", "g", "exact");
    for name in LimitName::ALL {
        let _ = write!(out, " {:>24}", name.label());
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{:>10} {:>6}", sig6(row.g), row.exact);
        for v in &row.values {
            let _ = write!(out, " {:>24}", limit_cell(v.as_ref()));
        }
        out.push('\n');
    }
    out
}

/// Render the reference table: one row per (α, g) pair, integer columns
/// for the exact count, the four phase/ladder windows, and the five
/// classical limits.
pub fn render_reference_table(rows: &[BoundsReport], format: OutputFormat) -> String {
    let headers = [
        "alpha", "g", "N", "phase_lo", "phase_up", "ladder_lo", "ladder_up", "moment",
        "half_wave", "mixed", "tail", "depth",
    ];
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(rows.len());
    for (report, &(alpha, g)) in rows.iter().zip(&REFERENCE_TABLE_PAIRS) {
        let grab = |name: LimitName| -> String {
            report
                .limit(name)
                .map(|v| v.bound.to_string())
                .unwrap_or_else(|| "-".to_string())
        };
        cells.push(vec![
            format!("{alpha}"),
            format!("{g}"),
            report.exact.count.to_string(),
            grab(LimitName::PhaseLowerRegular),
            grab(LimitName::PhaseUpperRegular),
            grab(LimitName::LadderLower),
            grab(LimitName::LadderUpper),
            grab(LimitName::MomentUpper),
            grab(LimitName::HalfWaveUpper),
            grab(LimitName::MixedMomentUpper),
            grab(LimitName::TailBalanceLower),
            grab(LimitName::DepthScaledLower),
        ]);
    }
    match format {
        OutputFormat::Csv | OutputFormat::Machine => {
            let mut out = headers.join(",");
            out.push('\n');
            for row in cells {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Table => {
            let mut out = String::new();
            for h in headers {
                let _ = write!(out, "{h:>10}");
            }
            out.push('\n');
            for row in cells {
                for cell in row {
                    let _ = write!(out, "{cell:>10}");
                }
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hulthen_report_matches_known_bounds() {
        let pot = Potential::builtin(Kind::Hulthen, 2.5, 1.0, f64::NAN).unwrap();
        let report = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        assert_eq!(report.exact.count, 2);
        assert!(!report.sandwich_violation);
        assert_eq!(report.limit(LimitName::HalfWaveUpper).unwrap().bound, 5);
        assert_eq!(report.limit(LimitName::MomentUpper).unwrap().bound, 10);
        assert_eq!(report.limit(LimitName::PhaseUpper).unwrap().bound, 3);
        assert_eq!(report.limit(LimitName::PhaseLowerSingular).unwrap().bound, 1);
        // Half-wave raw is exactly 2g = 5 here; the integerizer must flag it.
        assert!(report.limit(LimitName::HalfWaveUpper).unwrap().marginal);
        // Origin-singular well: the regular-only limits must be absent,
        // each leaving a warning.
        assert!(report.limit(LimitName::DepthScaledLower).is_none());
        assert!(report.limit(LimitName::LadderUpper).is_none());
        assert!(report.warnings.iter().any(|w| w.contains("not applicable")));
    }

    #[test]
    fn inverse_square_report_matches_reference_row() {
        let pot = Potential::builtin(Kind::InverseSquare, 10.0, 1.0, 1.0).unwrap();
        let report = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        assert_eq!(report.exact.count, 2);
        assert_eq!(report.limit(LimitName::MomentUpper).unwrap().bound, 19);
        assert_eq!(report.limit(LimitName::HalfWaveUpper).unwrap().bound, 4);
        assert_eq!(report.limit(LimitName::MixedMomentUpper).unwrap().bound, 4);
        assert_eq!(report.limit(LimitName::TailBalanceLower).unwrap().bound, 2);
        assert_eq!(report.limit(LimitName::DepthScaledLower).unwrap().bound, 2);
        assert_eq!(report.limit(LimitName::PhaseLowerRegular).unwrap().bound, 2);
        assert_eq!(report.limit(LimitName::PhaseUpperRegular).unwrap().bound, 2);
    }

    #[test]
    fn sub_threshold_well_reports_zero_everywhere() {
        let pot = Potential::builtin(Kind::SquareWell, 0.5, 1.0, f64::NAN).unwrap();
        let report = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        assert_eq!(report.exact.count, 0);
        for name in [
            LimitName::PhaseUpperRegular,
            LimitName::PhaseLowerRegular,
            LimitName::LadderUpper,
            LimitName::LadderLower,
        ] {
            assert_eq!(report.limit(name).unwrap().bound, 0, "{name}");
        }
        assert!(!report.sandwich_violation);
    }

    #[test]
    fn tightest_window_brackets_the_count() {
        let pot = Potential::builtin(Kind::Exponential, 10.0, 1.0, f64::NAN).unwrap();
        let report = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        let (lo, hi) = report.tightest_window();
        assert!(lo <= report.exact.count);
        assert!(report.exact.count <= hi.unwrap());
        // The phase bounds should pin N = 6 within [5, 7].
        assert!(lo >= 5, "window floor {lo}");
        assert!(hi.unwrap() <= 7, "window ceiling {hi:?}");
    }

    #[test]
    fn sweep_is_ordered_and_monotone() {
        let grid = coupling_grid(1.0, 12.0, 20);
        let rows = sweep(Kind::PoschlTeller, f64::NAN, 1.0, &grid, DEFAULT_REL_TOL).unwrap();
        assert_eq!(rows.len(), 21);
        for pair in rows.windows(2) {
            assert!(pair[0].g < pair[1].g);
            assert!(pair[0].exact <= pair[1].exact);
        }
        assert_eq!(rows[0].exact, 0);
        assert!(rows.last().unwrap().exact >= 5);
    }

    #[test]
    fn sweep_below_threshold_is_all_zero() {
        let grid = coupling_grid(0.1, 1.0, 5);
        let rows = sweep(Kind::SquareWell, f64::NAN, 1.0, &grid, DEFAULT_REL_TOL).unwrap();
        assert!(rows.iter().all(|r| r.exact == 0));
    }

    #[test]
    fn renderers_are_deterministic_and_complete() {
        let pot = Potential::builtin(Kind::InverseSquare, 10.0, 1.0, 1.0).unwrap();
        let report = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        let a = render_report(&report, OutputFormat::Machine);
        let report2 = BoundsReport::compute(&pot, DEFAULT_REL_TOL).unwrap();
        let b = render_report(&report2, OutputFormat::Machine);
        assert_eq!(a, b);
        assert!(a.contains("exact.count = 2"));
        assert!(a.contains("moment-upper.bound = 19"));
        let csv = render_report(&report, OutputFormat::Csv);
        assert!(csv.starts_with("limit,side,raw,bound,marginal\n"));
        let table = render_report(&report, OutputFormat::Table);
        assert!(table.contains("tightest window: [2, 2]"));
    }

    #[test]
    fn six_digit_formatting_is_stable() {
        assert_eq!(sig6(4.412712_345), "4.41271");
        assert_eq!(sig6(193147.18), "193147");
        assert_eq!(sig6(0.00012345678), "0.000123457");
        assert_eq!(sig6(-2.5), "-2.50000");
        assert_eq!(sig6(0.0), "0.00000");
        assert_eq!(sig6(1.0e18), "1.00000e18");
    }

    #[test]
    fn env_tolerance_parses_and_validates() {
        // No variable set in the test environment by default.
        assert_eq!(tolerance_from_env().unwrap(), DEFAULT_REL_TOL);
    }
}
