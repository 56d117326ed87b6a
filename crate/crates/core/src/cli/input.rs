//! Instance selection and list parsing for the command line.

use std::path::Path;

use serde::Deserialize;

use crate::geometry::{CandidateSet, Point};
use crate::instances::{simplex_r_for_sigma, Instance};

use super::CliError;

pub const DEFAULT_LINE4_SIGMA: f64 = 9.0;
pub const DEFAULT_R: f64 = 3.0;
pub const DEFAULT_M: usize = 4;

/// An instance plus whatever votes and positions came with it.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub instance: Instance,
    pub label: String,
    /// 0-based, already remapped to the stored candidate order.
    pub actions: Option<Vec<usize>>,
    pub positions: Option<Vec<Point>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    dimension: usize,
    candidates: Vec<Vec<f64>>,
    #[serde(default)]
    actions: Option<Vec<usize>>,
    #[serde(default)]
    positions: Option<Vec<Vec<f64>>>,
}

/// Builtin id (`line3`, `line4`, `simplex`, `multi4`) or a JSON file path.
pub fn load_instance(
    name: &str,
    sigma: Option<f64>,
    r: Option<f64>,
    m: Option<usize>,
) -> Result<Loaded, CliError> {
    let plain = |instance: Instance, label: String| Loaded {
        instance,
        label,
        actions: None,
        positions: None,
    };
    match name {
        "line3" => Ok(plain(Instance::line3(), "line3".into())),
        "line4" => {
            let s = sigma.unwrap_or(DEFAULT_LINE4_SIGMA);
            Ok(plain(Instance::line4(s)?, format!("line4(sigma={})", super::format::fmt_g(s))))
        }
        "simplex" | "multi4" => {
            let m = if name == "multi4" {
                if m.is_some_and(|m| m != 4) {
                    return Err(CliError::Usage("multi4 always has m = 4".into()));
                }
                4
            } else {
                m.unwrap_or(DEFAULT_M)
            };
            let r = simplex_r(m, sigma, r)?;
            Ok(plain(
                Instance::simplex(m, r)?,
                format!("{name}(m={m},r={})", super::format::fmt_g(r)),
            ))
        }
        path => load_file(Path::new(path)),
    }
}

/// `r` from `--r`, else from `--sigma`, else the default.
pub fn simplex_r(m: usize, sigma: Option<f64>, r: Option<f64>) -> Result<f64, CliError> {
    match (r, sigma) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --r or --sigma, not both".into())),
        (Some(r), None) => Ok(r),
        (None, Some(s)) => Ok(simplex_r_for_sigma(m, s)?),
        (None, None) => Ok(DEFAULT_R),
    }
}

fn load_file(path: &Path) -> Result<Loaded, CliError> {
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "unknown instance '{}': expected line3, line4, simplex, multi4 or a JSON file",
            path.display()
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: InstanceFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed instance file {}: {e}", path.display())))?;
    let to_points = |rows: Vec<Vec<f64>>, what: &str| -> Result<Vec<Point>, CliError> {
        rows.into_iter()
            .enumerate()
            .map(|(i, c)| {
                if c.len() != file.dimension {
                    return Err(CliError::Usage(format!(
                        "{what} {} has {} coordinates, dimension is {}",
                        i + 1,
                        c.len(),
                        file.dimension
                    )));
                }
                Ok(Point::new(c)?)
            })
            .collect()
    };
    let (cs, order) = CandidateSet::with_order(to_points(file.candidates, "candidate")?)?;
    if order.iter().enumerate().any(|(i, &o)| i != o) {
        log::warn!(
            "candidates reordered left to right; stored y1..y{} are input candidates {:?}",
            order.len(),
            order.iter().map(|o| o + 1).collect::<Vec<_>>()
        );
    }
    let actions = file
        .actions
        .map(|a| {
            a.into_iter()
                .map(|v| {
                    if v == 0 || v > order.len() {
                        return Err(CliError::Usage(format!(
                            "action {v} out of range 1..={}",
                            order.len()
                        )));
                    }
                    Ok(order.iter().position(|&o| o == v - 1).expect("permutation"))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let positions = file.positions.map(|p| to_points(p, "position")).transpose()?;
    Ok(Loaded {
        instance: Instance::custom(cs),
        label: path.display().to_string(),
        actions,
        positions,
    })
}

/// `1,2,3` (1-based) to 0-based indices.
pub fn parse_actions(s: &str, m: usize) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            let v: usize = t
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad action '{t}'")))?;
            if v == 0 || v > m {
                return Err(CliError::Usage(format!("action {v} out of range 1..={m}")));
            }
            Ok(v - 1)
        })
        .collect()
}

/// Points separated by `;`, coordinates by `,`. On a line, `,` also
/// separates points.
pub fn parse_positions(s: &str, dim: usize) -> Result<Vec<Point>, CliError> {
    let groups: Vec<Vec<&str>> = if dim == 1 {
        s.split([',', ';']).map(|t| vec![t]).collect()
    } else {
        s.split(';').map(|p| p.split(',').collect()).collect()
    };
    groups
        .into_iter()
        .map(|coords| {
            let c = coords
                .iter()
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|_| CliError::Usage(format!("bad coordinate '{t}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if c.len() != dim {
                return Err(CliError::Usage(format!(
                    "position has {} coordinates, dimension is {dim}",
                    c.len()
                )));
            }
            Ok(Point::new(c)?)
        })
        .collect()
}

/// `3,5,9`, `3..6` (inclusive) or `6..60:6`. Empty string or `lo > hi`
/// gives an empty list.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad integer list '{s}'"));
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = rest.split_once(':').unwrap_or((rest, "1"));
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        let step: usize = step.trim().parse().map_err(|_| bad())?;
        if step == 0 {
            return Err(bad());
        }
        return Ok((lo..=hi).step_by(step).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}

/// `3,5,9` or `3..9:2` (inclusive when the step lands on `hi`).
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("bad number list '{s}'"));
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = rest.split_once(':').ok_or_else(bad)?;
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        let step: f64 = step.trim().parse().map_err(|_| bad())?;
        if !(step > 0.0) {
            return Err(bad());
        }
        let count = if hi < lo { 0 } else { ((hi - lo) / step + 1e-9).floor() as usize + 1 };
        return Ok((0..count).map(|i| lo + i as f64 * step).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}
