//! Closed-form lower bounds and their instantiations on concrete profiles.

use crate::error::{Error, Result};
use crate::instances::{line_k_range, profiles_line_three, profiles_sigma6, profiles_thm_line, NamedProfile};
use crate::mechanism::{Mechanism, PairIndependent};
use crate::model::{all_pairs, expected_social_cost, opt, ratio, PairDistribution};

/// Randomized bound for a fixed `k`:
/// `(sigma - 2) / (2k(sigma - 1)/(n - k) + (n - 5k)/(2k))`.
pub fn line_randomized_bound_at(n: usize, sigma: f64, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    (sigma - 2.0) / (2.0 * k * (sigma - 1.0) / (n - k) + (n - 5.0 * k) / (2.0 * k))
}

/// Deterministic bound for a fixed `k`: `min{2k(sigma - 1)/(n - k), (n - k)/(2k)}`.
pub fn line_deterministic_bound_at(n: usize, sigma: f64, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    (2.0 * k * (sigma - 1.0) / (n - k)).min((n - k) / (2.0 * k))
}

/// The single `k` the case analysis uses: `floor(n / (2 sqrt(sigma - 1) + 1))`
/// when that is at least 1, else 1.
pub fn line_case_k(n: usize, sigma: f64) -> usize {
    let d = 2.0 * (sigma - 1.0).sqrt() + 1.0;
    if n as f64 >= d {
        ((n as f64) / d).floor() as usize
    } else {
        1
    }
}

/// Best lower bound over every integer `k` in
/// `[ceil(n / (2 sigma - 1)), floor(n / 3)]`; 0 if that range is empty.
pub fn line_lower_bound(n: usize, sigma: f64, deterministic: bool) -> Result<f64> {
    if sigma < 3.0 || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("sigma must be >= 3, got {sigma}")));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    let (lo, hi) = line_k_range(n, sigma);
    Ok((lo..=hi)
        .map(|k| {
            if deterministic {
                line_deterministic_bound_at(n, sigma, k)
            } else {
                line_randomized_bound_at(n, sigma, k)
            }
        })
        .fold(0.0, f64::max))
}

/// `min{n, sqrt(sigma)}`, the scale both line bounds are stated in.
pub fn line_scale(n: usize, sigma: f64) -> f64 {
    (n as f64).min(sigma.sqrt())
}

/// The two elections of the line argument evaluated for one mechanism.
#[derive(Debug, Clone)]
pub struct LineTwoElections {
    pub k: usize,
    /// Ratio on `x1` voting `a^0`.
    pub gamma1: f64,
    /// Ratio on `x2` voting `a^k`.
    pub gamma2: f64,
    /// The randomized bound at this `k`.
    pub bound: f64,
}

impl LineTwoElections {
    pub fn worse(&self) -> f64 {
        self.gamma1.max(self.gamma2)
    }
}

pub fn line_two_elections(mech: &dyn Mechanism, sigma: f64, n: usize, k: usize) -> Result<LineTwoElections> {
    let fam = profiles_thm_line(sigma, n, k, 0)?;
    Ok(LineTwoElections {
        k,
        gamma1: profile_ratio(mech, &fam.x1)?,
        gamma2: profile_ratio(mech, &fam.x2)?,
        bound: line_randomized_bound_at(n, sigma, k),
    })
}

/// `E[SC] / OPT` of a mechanism on a named profile.
pub fn profile_ratio(mech: &dyn Mechanism, p: &NamedProfile) -> Result<f64> {
    let out = mech.elect(&p.election)?;
    let cs = p.election.candidates();
    let e = out.expected_social_cost(&p.profile, cs)?;
    let (_, o) = crate::model::opt_committee(&p.profile, cs, out.committee_size())?;
    ratio(e, o)
}

/// Exact ratio of Pair-Independent on the profile with voters split evenly
/// over `y1`, `y2` and `y_m`.
pub fn pair_independent_ratio_instance3(m: usize, r: f64, n: usize) -> Result<f64> {
    if n % 3 != 0 {
        return Err(Error::InvalidParameter(format!("n must be divisible by 3, got {n}")));
    }
    let fam = profiles_sigma6(m, r, n)?;
    let x3 = fam.last().expect("x3 is generated last");
    profile_ratio(&PairIndependent, x3)
}

/// Minimax over a grid of the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct Minimax {
    pub value: f64,
    /// `(p12, p13, p23)`.
    pub argmin: [f64; 3],
}

/// Worst of the three line-three profiles for every lottery on a grid over
/// `(p12, p13, p23)`, minimised. Ratios are evaluated from the profiles, not
/// from a formula.
pub fn seven_thirds_minimax(grid_step: f64) -> Result<Minimax> {
    if !(grid_step > 0.0 && grid_step <= 0.05) {
        return Err(Error::InvalidParameter(format!(
            "grid step must be in (0, 0.05], got {grid_step}"
        )));
    }
    let profiles = profiles_line_three()?;
    let opts: Vec<f64> = profiles
        .iter()
        .map(|p| opt(&p.profile, p.election.candidates()).map(|(_, c)| c))
        .collect::<Result<_>>()?;
    let pairs = all_pairs(3);
    let steps = (1.0 / grid_step + 1e-9).floor() as usize;

    let mut best: Option<Minimax> = None;
    for i in 0..=steps {
        for j in 0..=(steps - i) {
            let p12 = i as f64 * grid_step;
            let p13 = j as f64 * grid_step;
            let p23 = (1.0 - p12 - p13).max(0.0);
            let d = PairDistribution::new([(pairs[0], p12), (pairs[1], p13), (pairs[2], p23)])?;
            let mut worst = 0.0_f64;
            for (p, &o) in profiles.iter().zip(&opts) {
                let e = expected_social_cost(&d, &p.profile, p.election.candidates())?;
                worst = worst.max(ratio(e, o)?);
            }
            if best.as_ref().map_or(true, |b| worst < b.value) {
                best = Some(Minimax {
                    value: worst,
                    argmin: [p12, p13, p23],
                });
            }
        }
    }
    Ok(best.expect("grid is non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_small_case() {
        assert_eq!(line_deterministic_bound_at(3, 3.0, 1), 1.0);
        assert_eq!(line_lower_bound(3, 3.0, true).unwrap(), 1.0);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(line_lower_bound(2, 3.0, false).is_err());
        assert!(line_lower_bound(6, 2.5, true).is_err());
    }

    #[test]
    fn case_k_is_in_range() {
        for n in [6, 12, 60] {
            for sigma in [3.0, 9.0, 100.0] {
                let k = line_case_k(n, sigma);
                assert!(k >= 1 && k <= n / 3, "n={n} sigma={sigma} k={k}");
            }
        }
    }

    #[test]
    fn uniform_lottery_gives_seven_thirds() {
        let m = seven_thirds_minimax(0.05).unwrap();
        assert!(m.value >= 7.0 / 3.0 - 1e-12);
        assert!(m.value <= 7.0 / 3.0 + 0.1);
    }

    #[test]
    fn bad_grid_step_is_rejected() {
        assert!(seven_thirds_minimax(0.0).is_err());
        assert!(seven_thirds_minimax(0.1).is_err());
    }
}
