//! Parameter sweeps: one distortion search per (mechanism, sigma, n).

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::instances::{Instance, InstanceKind};
use crate::mechanism::by_name;
use crate::verify::bounds::line_lower_bound;
use crate::verify::search::{distortion_search, float_json, SearchConfig};

use super::format::{fmt_g, fmt_opt};

pub const CSV_HEADER: &str =
    "n,sigma,mechanism,empirical_distortion,analytic_upper_bound,analytic_lower_bound,runtime_ms,seed";

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub n: usize,
    pub sigma: f64,
    pub mechanism: String,
    pub empirical: f64,
    pub upper: Option<f64>,
    pub lower: Option<f64>,
    pub runtime_ms: Option<u128>,
    pub seed: u64,
}

impl SweepRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            fmt_g(self.sigma),
            self.mechanism,
            fmt_g(self.empirical),
            fmt_opt(self.upper),
            fmt_opt(self.lower),
            self.runtime_ms.map(|t| t.to_string()).unwrap_or_default(),
            self.seed
        )
    }

    pub fn json(&self) -> Value {
        json!({
            "n": self.n,
            "sigma": self.sigma,
            "mechanism": self.mechanism,
            "empirical_distortion": float_json(self.empirical),
            "analytic_upper_bound": self.upper,
            "analytic_lower_bound": self.lower,
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        })
    }
}

/// Known bounds for a mechanism on an instance, `(upper, lower)`.
pub fn analytic_bounds(mechanism: &str, inst: &Instance, n: usize) -> (Option<f64>, Option<f64>) {
    let s = inst.sigma();
    let nf = n as f64;
    match mechanism {
        "two-extremes" if inst.candidates.dim() == 1 && n >= 2 => {
            let b = 2.0 * nf - 3.0;
            (Some(b), Some(b))
        }
        "sequential-dictator" if n >= 2 => {
            let b = 2.0 * (nf - 2.0) * s + 1.0;
            let tight = matches!(inst.kind, InstanceKind::Simplex { m: 4, .. }) && n >= 3;
            (Some(b), tight.then_some(b))
        }
        "pair-independent" => {
            let lower = match inst.kind {
                InstanceKind::Simplex { m, .. } if m >= 4 && n >= 3 => Some(s / 6.0),
                InstanceKind::Line4 { sigma } => line_lower_bound(n, sigma, false).ok().filter(|&b| b > 0.0),
                _ => None,
            };
            (Some(1.0 + 6.0 * s), lower)
        }
        _ => (None, None),
    }
}

/// One point of the sweep grid.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub mechanism: String,
    pub instance: Instance,
    pub n: usize,
}

/// Runs every point in parallel; rows come back in grid order. Points that
/// fail (for example a one-dimensional rule on a simplex) are skipped with a
/// logged reason.
pub fn run_sweep(points: &[SweepPoint], cfg: &SearchConfig, timing: bool) -> Vec<SweepRow> {
    points
        .par_iter()
        .map(|pt| {
            let Some(mech) = by_name(&pt.mechanism) else {
                log::warn!("skipping unknown mechanism {}", pt.mechanism);
                return None;
            };
            let start = Instant::now();
            match distortion_search(mech.as_ref(), &pt.instance, pt.n, cfg) {
                Ok(rep) => {
                    let (upper, lower) = analytic_bounds(&pt.mechanism, &pt.instance, pt.n);
                    Some(SweepRow {
                        n: pt.n,
                        sigma: pt.instance.sigma(),
                        mechanism: pt.mechanism.clone(),
                        empirical: rep.best_ratio,
                        upper,
                        lower,
                        runtime_ms: timing.then(|| start.elapsed().as_millis()),
                        seed: cfg.seed,
                    })
                }
                Err(e) => {
                    log::warn!(
                        "skipping {} n={} sigma={}: {e}",
                        pt.mechanism,
                        pt.n,
                        fmt_g(pt.instance.sigma())
                    );
                    None
                }
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
