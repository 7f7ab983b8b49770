//! `nbound` — count S-wave bound states of an attractive monotonic
//! central potential and bracket the count with rigorous upper and lower
//! limits.
//!
//! Subcommands: `bounds` (one potential, full report), `sweep` (a grid of
//! couplings, figure data), `table1` (the nine-row reference table for the
//! shifted inverse-square well) and `kg` (reduce a relativistic scalar
//! well `W` to `V = 2mW - W²` first).
//!
//! Exit codes: 0 on success, 2 on invalid input or a numerical failure,
//! 3 when a rigorous limit contradicts the exact count (which would mean
//! a bug, never physics).
//!
//! The environment variable `NBOUND_REL_TOL` overrides the default
//! relative tolerance of the quadrature/ODE machinery.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use boundstates::report::{self, BoundsReport, OutputFormat};
use boundstates::{config, Error, Kind, Potential, Result};

/// Rigorous bounds on the number of S-wave bound states.
#[derive(Parser)]
#[command(name = "nbound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact count plus every applicable limit for one potential.
    Bounds {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Exact count and limits over a grid of couplings (figure data).
    Sweep {
        /// Built-in well shape to sweep.
        #[arg(long)]
        kind: Kind,
        /// Smallest coupling of the grid (> 0).
        #[arg(long)]
        g_min: f64,
        /// Largest coupling of the grid (>= g-min).
        #[arg(long)]
        g_max: f64,
        /// Number of grid intervals; the grid has steps + 1 points.
        #[arg(long, default_value_t = 50)]
        steps: usize,
        /// Range parameter R.
        #[arg(long = "R", default_value_t = 1.0)]
        r_scale: f64,
        /// Width parameter alpha (inverse-square well only).
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Nine-row reference table for the shifted inverse-square well.
    Table1 {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Reduce a scalar well W of the relativistic (Klein-Gordon) problem
    /// with mass m to V = 2mW - W², then report bounds for V.
    Kg {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Particle mass m (units hbar = c = 1).
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[command(flatten)]
        io: IoArgs,
    },
}

/// Potential selection: `--kind` with its parameters, or `--config FILE`.
#[derive(Args)]
struct PotentialArgs {
    /// Built-in well shape (square-well, poschl-teller, exponential,
    /// hulthen, yukawa, inverse-square).
    #[arg(long, requires = "g", conflicts_with = "config")]
    kind: Option<Kind>,
    /// Coupling strength g.
    #[arg(long, requires = "kind", conflicts_with = "config")]
    g: Option<f64>,
    /// Range parameter R.
    #[arg(long = "R", default_value_t = 1.0, conflicts_with = "config")]
    r_scale: f64,
    /// Width parameter alpha (inverse-square well only).
    #[arg(long, conflicts_with = "config")]
    alpha: Option<f64>,
    /// Read the potential from a description file (`key = value` lines,
    /// or `kind = tabulated` plus `r V(r)` sample rows).
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct IoArgs {
    /// Output format: table, csv or machine. Defaults to table (csv for
    /// sweep).
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::SandwichViolation => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let rel_tol = report::tolerance_from_env()?;
    match cli.command {
        Command::Bounds { potential, io } => {
            let pot = build_potential(&potential)?;
            report_and_emit(&pot, &io, rel_tol)
        }
        Command::Kg { potential, mass, io } => {
            let w = build_potential(&potential)?;
            let pot = Potential::kg_reduce(w, mass)?;
            report_and_emit(&pot, &io, rel_tol)
        }
        Command::Sweep {
            kind,
            g_min,
            g_max,
            steps,
            r_scale,
            alpha,
            io,
        } => {
            if !(g_min.is_finite() && g_max.is_finite() && g_min > 0.0 && g_max >= g_min) {
                return Err(Error::InvalidParameter(format!(
                    "need 0 < g-min <= g-max, got {g_min} and {g_max}"
                )));
            }
            check_alpha(kind, alpha)?;
            let grid = report::coupling_grid(g_min, g_max, steps);
            let rows = report::sweep(kind, alpha.unwrap_or(f64::NAN), r_scale, &grid, rel_tol)?;
            let text = report::render_sweep(&rows, io.format.unwrap_or(OutputFormat::Csv));
            emit(io.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { io } => {
            let rows = report::reference_table(rel_tol)?;
            let text =
                report::render_reference_table(&rows, io.format.unwrap_or(OutputFormat::Table));
            emit(io.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_potential(args: &PotentialArgs) -> Result<Potential> {
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
        })?;
        return config::parse_potential(&text);
    }
    let (Some(kind), Some(g)) = (args.kind, args.g) else {
        return Err(Error::InvalidParameter(
            "specify a potential with --kind and --g, or with --config".into(),
        ));
    };
    check_alpha(kind, args.alpha)?;
    Potential::builtin(kind, g, args.r_scale, args.alpha.unwrap_or(f64::NAN))
}

fn check_alpha(kind: Kind, alpha: Option<f64>) -> Result<()> {
    if kind.needs_alpha() && alpha.is_none() {
        return Err(Error::InvalidParameter(format!(
            "--alpha is required for the {kind} well"
        )));
    }
    if !kind.needs_alpha() && alpha.is_some() {
        return Err(Error::InvalidParameter(format!(
            "--alpha is only meaningful for the inverse-square well, not {kind}"
        )));
    }
    Ok(())
}

fn report_and_emit(pot: &Potential, io: &IoArgs, rel_tol: f64) -> Result<ExitCode> {
    let rep = BoundsReport::compute(pot, rel_tol)?;
    let text = report::render_report(&rep, io.format.unwrap_or(OutputFormat::Table));
    emit(io.output.as_deref(), &text)?;
    Ok(if rep.sandwich_violation {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
