//! Strategy-proofness by exhaustive deviation checking.
//!
//! For every election with up to `max_n` voters, every voter, every test
//! position whose nearest set contains the vote, and every other candidate
//! the voter could report instead, the expected cost of the truthful vote must not
//! exceed the deviation's cost by more than [`SP_TOL`].

use serde::Serialize;

use crate::enumerate::{compositions, sequence_at, sequence_count, sequence_from_counts};
use crate::error::Result;
use crate::geometry::Point;
use crate::instances::Instance;
use crate::mechanism::{Mechanism, Outcome};
use crate::model::Election;

use super::suite::{PositionSuite, SuiteConfig};

/// A deviation must win by more than this to count.
pub const SP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SpConfig {
    pub max_n: usize,
    pub suite: SuiteConfig,
    /// Stop after this many (context, position, vote) cost evaluations.
    pub max_evaluations: Option<u64>,
    /// Keep at most this many violations (the count is still exact).
    pub max_recorded: usize,
}

impl Default for SpConfig {
    fn default() -> Self {
        SpConfig {
            max_n: 4,
            suite: SuiteConfig::default(),
            max_evaluations: None,
            max_recorded: 1000,
        }
    }
}

/// A voter who gains by misreporting.
#[derive(Debug, Clone)]
pub struct SpViolation {
    /// The election with the voter reporting truthfully.
    pub election: Election,
    pub voter: usize,
    pub truthful_action: usize,
    pub deviation: usize,
    pub position: Point,
    pub truthful_cost: f64,
    pub deviation_cost: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpViolationRecord {
    pub actions: Vec<usize>,
    pub voter: usize,
    pub truthful_action: usize,
    pub deviation: usize,
    pub position: Vec<f64>,
    pub truthful_cost: f64,
    pub deviation_cost: f64,
}

impl SpViolation {
    /// 1-based, serialisable form.
    pub fn record(&self) -> SpViolationRecord {
        SpViolationRecord {
            actions: self.election.one_based_actions(),
            voter: self.voter + 1,
            truthful_action: self.truthful_action + 1,
            deviation: self.deviation + 1,
            position: self.position.coords().to_vec(),
            truthful_cost: self.truthful_cost,
            deviation_cost: self.deviation_cost,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpReport {
    pub violations: Vec<SpViolation>,
    pub violation_count: u64,
    pub truncated: bool,
    pub contexts: u64,
    pub evaluations: u64,
    pub positions: usize,
}

impl SpReport {
    pub fn is_strategy_proof(&self) -> bool {
        self.violation_count == 0 && !self.truncated
    }
}

/// Runs the deviation check over the test positions built from `cfg.suite`.
pub fn check_strategy_proof(mech: &dyn Mechanism, inst: &Instance, cfg: &SpConfig) -> Result<SpReport> {
    let suite = PositionSuite::build(inst, &cfg.suite)?;
    check_strategy_proof_on(mech, inst, &suite, cfg)
}

/// Same as [`check_strategy_proof`] with an explicit position suite.
pub fn check_strategy_proof_on(
    mech: &dyn Mechanism,
    inst: &Instance,
    suite: &PositionSuite,
    cfg: &SpConfig,
) -> Result<SpReport> {
    let m = inst.candidates.m();
    let mut report = SpReport {
        violations: Vec::new(),
        violation_count: 0,
        truncated: false,
        contexts: 0,
        evaluations: 0,
        positions: suite.len(),
    };
    let per_context = (suite.len() * m) as u64;

    'outer: for n in 1..=cfg.max_n {
        for (others, slot) in contexts(mech.is_anonymous(), m, n - 1) {
            if let Some(budget) = cfg.max_evaluations {
                if report.evaluations + per_context > budget {
                    report.truncated = true;
                    break 'outer;
                }
            }
            report.contexts += 1;
            report.evaluations += per_context;

            let profile_with = |k: usize| {
                let mut a = others.clone();
                a.insert(slot, k);
                a
            };
            let outcomes: Vec<Outcome> = (0..m)
                .map(|k| mech.elect(&inst.election(profile_with(k))?))
                .collect::<Result<_>>()?;

            for (p, dists) in suite.dists.iter().enumerate() {
                let costs: Vec<f64> = outcomes.iter().map(|o| o.voter_cost_from(dists)).collect();
                let (best_dev, best_cost) = costs
                    .iter()
                    .copied()
                    .enumerate()
                    .fold((0, f64::INFINITY), |acc, (k, c)| if c < acc.1 { (k, c) } else { acc });
                for &t in &suite.nearest[p] {
                    if costs[t] > best_cost + SP_TOL {
                        report.violation_count += 1;
                        if report.violations.len() < cfg.max_recorded {
                            report.violations.push(SpViolation {
                                election: inst.election(profile_with(t))?,
                                voter: slot,
                                truthful_action: t,
                                deviation: best_dev,
                                position: suite.points[p].clone(),
                                truthful_cost: costs[t],
                                deviation_cost: best_cost,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `(others' votes, slot of the deviating voter)`. Anonymous mechanisms
/// only need one ordering per count vector; others need every ordering and
/// every slot.
fn contexts(anonymous: bool, m: usize, others: usize) -> Vec<(Vec<usize>, usize)> {
    if anonymous {
        compositions(others, m)
            .into_iter()
            .map(|c| (sequence_from_counts(&c), others))
            .collect()
    } else {
        let total = sequence_count(m, others).expect("small sizes");
        (0..total)
            .flat_map(|idx| {
                let seq = sequence_at(idx, m, others);
                (0..=others).map(move |slot| (seq.clone(), slot))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mechanism::{InvertedPairIndependent, PairIndependent, SequentialDictator, TwoExtremes};

    fn small() -> SpConfig {
        SpConfig {
            max_n: 3,
            suite: SuiteConfig {
                grid_step: 0.25,
                alpha_step: 0.25,
                random_points: 20,
                ..SuiteConfig::default()
            },
            ..SpConfig::default()
        }
    }

    #[test]
    fn two_extremes_has_no_violation_on_line3() {
        let r = check_strategy_proof(&TwoExtremes, &Instance::line3(), &small()).unwrap();
        assert!(r.is_strategy_proof(), "{:?}", r.violations.first());
        assert!(r.contexts > 0);
    }

    #[test]
    fn pair_independent_and_dictator_pass_on_multi4() {
        let inst = Instance::multi4(3.0).unwrap();
        for mech in [&PairIndependent as &dyn Mechanism, &SequentialDictator] {
            let r = check_strategy_proof(mech, &inst, &small()).unwrap();
            assert!(r.is_strategy_proof(), "{}: {:?}", mech.name(), r.violations.first());
        }
    }

    #[test]
    fn inverted_mechanism_is_caught_and_violation_recomputes() {
        let inst = Instance::multi4(3.0).unwrap();
        let r = check_strategy_proof(&InvertedPairIndependent, &inst, &small()).unwrap();
        assert!(r.violation_count > 0);
        let v = &r.violations[0];
        let cs = &inst.candidates;
        let truthful = InvertedPairIndependent.elect(&v.election).unwrap();
        let mut dev_actions = v.election.actions().to_vec();
        dev_actions[v.voter] = v.deviation;
        let deviated = InvertedPairIndependent
            .elect(&inst.election(dev_actions).unwrap())
            .unwrap();
        let tc = truthful.voter_cost(&v.position, cs).unwrap();
        let dc = deviated.voter_cost(&v.position, cs).unwrap();
        assert!((tc - v.truthful_cost).abs() < 1e-12);
        assert!(dc < tc - SP_TOL);
    }

    #[test]
    fn budget_truncates() {
        let cfg = SpConfig {
            max_evaluations: Some(10),
            ..small()
        };
        let r = check_strategy_proof(&TwoExtremes, &Instance::line3(), &cfg).unwrap();
        assert!(r.truncated);
        assert!(!r.is_strategy_proof());
    }

    #[test]
    fn non_anonymous_contexts_cover_every_slot() {
        let c = contexts(false, 3, 2);
        assert_eq!(c.len(), 9 * 3);
        let c = contexts(true, 3, 2);
        assert_eq!(c.len(), 6);
    }
}
