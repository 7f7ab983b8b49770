//! Plain-text potential descriptions.
//!
//! A description is a sequence of lines; `#` starts a comment and blank
//! lines are ignored. Two layouts are accepted.
//!
//! A built-in well is a set of `key = value` assignments:
//!
//! ```text
//! kind  = hulthen    # square-well | poschl-teller | exponential |
//!                    # hulthen | yukawa | inverse-square
//! g     = 2.5        # coupling strength, > 0
//! R     = 1.0        # range, > 0 (optional, default 1)
//! alpha = 10.0       # width, > 0 (inverse-square well only)
//! ```
//!
//! A tabulated well is `kind = tabulated` followed by one `r V(r)` sample
//! per line, whitespace separated:
//!
//! ```text
//! kind = tabulated
//! 0.0  -25.0
//! 1.0  -25.0
//! 1.0   -4.0   # repeated radius: downward step in depth (well edge)
//! 2.5    0.0
//! ```
//!
//! Samples obey the same admissibility rules as
//! [`Potential::from_table`]: nondecreasing radii, finite nonpositive
//! nondecreasing values, jumps only upward.
//!
//! Keys are case-insensitive; kind names accept the same aliases as
//! [`Kind`]'s `FromStr` (`sw`, `pt`, `exp`, `invsq`, underscores for
//! hyphens).

use crate::error::{Error, Result};
use crate::potential::{Kind, Potential};

/// What the `kind =` line selected.
enum Selected {
    Builtin(Kind),
    Tabulated,
}

/// Parses a potential description (the config-file format above).
///
/// Errors carry the 1-based line number of the offending line where one
/// exists; whole-file problems (a key that is missing entirely) report as
/// [`Error::InvalidParameter`].
pub fn parse_potential(text: &str) -> Result<Potential> {
    let mut kind: Option<Selected> = None;
    let mut g: Option<f64> = None;
    let mut r_scale: Option<f64> = None;
    let mut alpha: Option<f64> = None;
    let mut samples: Vec<(f64, f64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }

        if let Some((key, value)) = content.split_once('=') {
            let key = key.trim().to_ascii_lowercase();
            let value = value.trim();
            match key.as_str() {
                "kind" => {
                    if kind.is_some() {
                        return Err(Error::Config {
                            line,
                            message: "duplicate key `kind`".into(),
                        });
                    }
                    kind = Some(if value.eq_ignore_ascii_case("tabulated") {
                        Selected::Tabulated
                    } else {
                        Selected::Builtin(value.parse().map_err(|e| Error::Config {
                            line,
                            message: format!("{e}"),
                        })?)
                    });
                }
                "g" => set_number(&mut g, "g", value, line)?,
                "r" => set_number(&mut r_scale, "R", value, line)?,
                "alpha" => set_number(&mut alpha, "alpha", value, line)?,
                other => {
                    return Err(Error::Config {
                        line,
                        message: format!(
                            "unknown key `{other}` (expected kind, g, R or alpha)"
                        ),
                    });
                }
            }
        } else {
            // A bare line is a tabulated sample row.
            if !matches!(kind, Some(Selected::Tabulated)) {
                return Err(Error::Config {
                    line,
                    message: "expected `key = value` (sample rows are only \
                              allowed after `kind = tabulated`)"
                        .into(),
                });
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Config {
                    line,
                    message: format!(
                        "expected two columns `r V(r)`, got {} field(s)",
                        fields.len()
                    ),
                });
            }
            let parse = |field: &str, what: &str| -> Result<f64> {
                field.parse().map_err(|_| Error::Config {
                    line,
                    message: format!("{what} `{field}` is not a number"),
                })
            };
            samples.push((parse(fields[0], "radius")?, parse(fields[1], "value")?));
        }
    }

    match kind {
        None => Err(Error::InvalidParameter(
            "potential description does not set `kind`".into(),
        )),
        Some(Selected::Tabulated) => {
            if g.is_some() || r_scale.is_some() || alpha.is_some() {
                return Err(Error::InvalidParameter(
                    "a tabulated potential takes no g/R/alpha keys; its shape \
                     is fixed by the sample rows"
                        .into(),
                ));
            }
            Potential::from_table(&samples)
        }
        Some(Selected::Builtin(kind)) => {
            let Some(g) = g else {
                return Err(Error::InvalidParameter(
                    "potential description does not set `g`".into(),
                ));
            };
            if kind.needs_alpha() && alpha.is_none() {
                return Err(Error::InvalidParameter(format!(
                    "the {kind} well needs an `alpha` key"
                )));
            }
            if !kind.needs_alpha() && alpha.is_some() {
                return Err(Error::InvalidParameter(format!(
                    "`alpha` is only meaningful for the inverse-square well, not {kind}"
                )));
            }
            Potential::builtin(kind, g, r_scale.unwrap_or(1.0), alpha.unwrap_or(f64::NAN))
        }
    }
}

fn set_number(slot: &mut Option<f64>, key: &str, value: &str, line: usize) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Config {
            line,
            message: format!("duplicate key `{key}`"),
        });
    }
    let parsed: f64 = value.parse().map_err(|_| Error::Config {
        line,
        message: format!("value `{value}` for `{key}` is not a number"),
    })?;
    *slot = Some(parsed);
    Ok(())
}
