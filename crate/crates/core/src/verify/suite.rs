use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geometry::{midpoint, CandidateSet, Point};
use crate::instances::{lemma1_suite, Instance, InstanceKind};
use crate::model::nearest_from;

pub const DEFAULT_SEED: u64 = 42;

/// Which voter positions to try.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Grid step on the line (one-dimensional instances only).
    pub grid_step: f64,
    /// Grid interval. `None` means `[-sigma, 3]` for the built-in lines and
    /// the candidates' span widened by 1 otherwise.
    pub grid_range: Option<(f64, f64)>,
    /// Alpha step for the lemma-1 points (simplex instances only).
    pub alpha_step: f64,
    /// Uniform samples in the candidates' bounding box widened by 1.
    pub random_points: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            grid_step: 0.05,
            grid_range: None,
            alpha_step: 0.1,
            random_points: 200,
            seed: DEFAULT_SEED,
        }
    }
}

/// A deduplicated list of test positions with their candidate distances
/// and nearest sets.
#[derive(Debug, Clone)]
pub struct PositionSuite {
    pub points: Vec<Point>,
    pub dists: Vec<Vec<f64>>,
    pub nearest: Vec<Vec<usize>>,
}

impl PositionSuite {
    pub fn build(inst: &Instance, cfg: &SuiteConfig) -> Result<Self> {
        let cs = &inst.candidates;
        let mut pts: Vec<Point> = cs.points().to_vec();
        for k in 0..cs.m() {
            for l in (k + 1)..cs.m() {
                pts.push(midpoint(&cs.points()[k], &cs.points()[l])?);
            }
        }
        if cs.dim() == 1 {
            let (lo, hi) = match (cfg.grid_range, inst.kind) {
                (Some(range), _) => range,
                (None, InstanceKind::Line3 | InstanceKind::Line4 { .. }) => (-inst.sigma(), 3.0),
                (None, _) => {
                    let (lo, hi) = cs.bounding_box();
                    (lo[0] - 1.0, hi[0] + 1.0)
                }
            };
            if cfg.grid_step > 0.0 {
                let steps = ((hi - lo) / cfg.grid_step + 1e-9).floor() as usize;
                pts.extend((0..=steps).map(|s| Point::scalar(lo + s as f64 * cfg.grid_step)));
            }
        }
        if let InstanceKind::Simplex { m, r } = inst.kind {
            if cfg.alpha_step > 0.0 {
                pts.extend(lemma1_suite(m, r, cfg.alpha_step)?);
            }
        }
        pts.extend(random_points(cs, cfg.random_points, cfg.seed));
        Ok(Self::from_points(cs, pts))
    }

    pub fn from_points(cs: &CandidateSet, pts: Vec<Point>) -> Self {
        let mut seen = HashSet::new();
        let points: Vec<Point> = pts
            .into_iter()
            .filter(|p| seen.insert(p.coords().iter().map(|c| c.to_bits()).collect::<Vec<u64>>()))
            .collect();
        let dists: Vec<Vec<f64>> = points
            .iter()
            .map(|p| (0..cs.m()).map(|k| cs.dist_to(p, k)).collect())
            .collect();
        let nearest = dists.iter().map(|d| nearest_from(d)).collect();
        PositionSuite {
            points,
            dists,
            nearest,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Seeded uniform samples in the bounding box widened by 1 on every side.
pub fn random_points(cs: &CandidateSet, count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = cs.bounding_box();
    (0..count)
        .map(|_| {
            let c = lo
                .iter()
                .zip(&hi)
                .map(|(&a, &b)| rng.gen_range((a - 1.0)..(b + 1.0)))
                .collect();
            Point::new(c).expect("finite sample")
        })
        .collect()
}
