//! Random Dictator is the only single-winner independent mechanism with
//! finite distortion: independence plus normalisation forces
//! `q_k(c) = b_k + slope * c`, and any nonzero intercept puts positive mass
//! on a candidate nobody stands at when all voters share one location.

use crate::enumerate::compositions;
use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::mechanism::{Outcome, RandomDictator};
use crate::model::{opt_committee, LocationProfile, NORMALIZATION_TOL, ZERO_COST_TOL};

/// A single-winner rule where candidate `k`'s probability depends only on
/// the candidate's own vote count.
pub trait SingleWinnerIndependent: Send + Sync {
    fn q(&self, k: usize, n_k: usize, n: usize, m: usize) -> f64;
}

impl SingleWinnerIndependent for RandomDictator {
    fn q(&self, _k: usize, n_k: usize, n: usize, _m: usize) -> f64 {
        n_k as f64 / n as f64
    }
}

impl<F> SingleWinnerIndependent for F
where
    F: Fn(usize, usize, usize, usize) -> f64 + Send + Sync,
{
    fn q(&self, k: usize, n_k: usize, n: usize, m: usize) -> f64 {
        self(k, n_k, n, m)
    }
}

/// All voters at one candidate with positive expected cost and zero OPT.
#[derive(Debug, Clone)]
pub struct InfiniteWitness {
    /// 0-based candidate where every voter stands.
    pub candidate: usize,
    pub expected_cost: f64,
    pub opt_cost: f64,
}

#[derive(Debug, Clone)]
pub struct UniquenessReport {
    /// `differences[k][c] = q_k(c + 1) - q_k(c)`.
    pub differences: Vec<Vec<f64>>,
    /// Common difference when all are equal.
    pub slope: Option<f64>,
    /// `q_k(0)`.
    pub intercepts: Vec<f64>,
    /// Largest `|sum_k q_k(n_k) - 1|` over all count vectors.
    pub normalization_error: f64,
    pub witness: Option<InfiniteWitness>,
}

impl UniquenessReport {
    pub fn is_affine(&self) -> bool {
        self.slope.is_some()
    }

    /// Affine, normalised, zero intercepts, slope `1/n`, no witness.
    pub fn is_random_dictator(&self, n: usize) -> bool {
        self.slope.is_some_and(|s| (s - 1.0 / n as f64).abs() <= 1e-12)
            && self.normalization_error <= NORMALIZATION_TOL
            && self.intercepts.iter().all(|b| b.abs() <= 1e-12)
            && self.witness.is_none()
    }
}

pub fn random_dictator_uniqueness_check(
    mech: &dyn SingleWinnerIndependent,
    n: usize,
    m: usize,
    r: f64,
) -> Result<UniquenessReport> {
    if !(1..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!("n must be in 1..=10, got {n}")));
    }
    if !(3..=5).contains(&m) {
        return Err(Error::InvalidParameter(format!("m must be in 3..=5, got {m}")));
    }
    let inst = Instance::simplex(m, r)?;

    let differences: Vec<Vec<f64>> = (0..m)
        .map(|k| (0..n).map(|c| mech.q(k, c + 1, n, m) - mech.q(k, c, n, m)).collect())
        .collect();
    let first = differences[0][0];
    let slope = differences
        .iter()
        .flatten()
        .all(|d| (d - first).abs() <= 1e-9)
        .then_some(first);
    let intercepts: Vec<f64> = (0..m).map(|k| mech.q(k, 0, n, m)).collect();
    let normalization_error = compositions(n, m)
        .iter()
        .map(|c| ((0..m).map(|k| mech.q(k, c[k], n, m)).sum::<f64>() - 1.0).abs())
        .fold(0.0, f64::max);

    // the far candidate first, then the rest
    let mut witness = None;
    for k in std::iter::once(m - 1).chain(0..m - 1) {
        let mut counts = vec![0; m];
        counts[k] = n;
        let probs: Vec<f64> = (0..m).map(|l| mech.q(l, counts[l], n, m)).collect();
        let x = LocationProfile::new(vec![inst.candidates.points()[k].clone(); n]);
        let cost = Outcome::Winners(probs).expected_social_cost(&x, &inst.candidates)?;
        let (_, o) = opt_committee(&x, &inst.candidates, 1)?;
        if o <= ZERO_COST_TOL && cost > ZERO_COST_TOL {
            witness = Some(InfiniteWitness {
                candidate: k,
                expected_cost: cost,
                opt_cost: o,
            });
            break;
        }
    }

    Ok(UniquenessReport {
        differences,
        slope,
        intercepts,
        normalization_error,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_dictator_passes() {
        for n in [1, 4, 10] {
            let rep = random_dictator_uniqueness_check(&RandomDictator, n, 4, 3.0).unwrap();
            assert!(rep.is_random_dictator(n), "{rep:?}");
        }
    }

    #[test]
    fn shifted_intercept_gets_a_witness() {
        let n = 5;
        // b_1 = 0.1, slope 0.9/n, others 0 intercept: q sums to 1
        let mech = move |k: usize, c: usize, n: usize, _m: usize| {
            let b = if k == 0 { 0.1 } else { 0.0 };
            b + 0.9 * c as f64 / n as f64
        };
        let rep = random_dictator_uniqueness_check(&mech, n, 4, 3.0).unwrap();
        assert!(rep.is_affine());
        let w = rep.witness.unwrap();
        assert_eq!(w.candidate, 3);
        let d_max = 22f64.sqrt();
        assert!((w.expected_cost - n as f64 * d_max * 0.1).abs() < 1e-9);
    }

    #[test]
    fn constant_rule_is_flagged() {
        let mech = |_k: usize, _c: usize, _n: usize, m: usize| 1.0 / m as f64;
        let rep = random_dictator_uniqueness_check(&mech, 3, 4, 3.0).unwrap();
        assert!(rep.witness.is_some());
        assert_eq!(rep.slope, Some(0.0));
        assert!(!rep.is_random_dictator(3));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(random_dictator_uniqueness_check(&RandomDictator, 11, 4, 3.0).is_err());
        assert!(random_dictator_uniqueness_check(&RandomDictator, 3, 6, 3.0).is_err());
    }
}
