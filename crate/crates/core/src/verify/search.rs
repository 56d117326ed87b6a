//! Worst-case distortion over a finite set of voter positions.
//!
//! For a fixed action profile and a fixed candidate committee `C`, the
//! supremum of `E[SC] / SC(C)` over positions is a ratio of sums that are
//! separable per voter, and voters with the same vote face the same choice.
//! Dinkelbach's iteration therefore finds the exact supremum over the
//! position set. Maximising over `C` gives the supremum of `E[SC] / OPT`
//! because `OPT` is the minimum over committees. The reported ratio is
//! always recomputed from the witness with its true `OPT`.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::enumerate::{compositions, sequence_at, sequence_count, sequence_from_counts, tally};
use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::mechanism::{Mechanism, Outcome};
use crate::model::{
    nearest_from, opt_committee, opt_from_dists, ratio, ratio_unchecked, Committee, Election,
    LocationProfile, ZERO_COST_TOL,
};

use super::suite::{random_points, PositionSuite, SuiteConfig, DEFAULT_SEED};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub suite: SuiteConfig,
    /// Extra fully random location profiles, voters voting truthfully.
    pub random_profiles: usize,
    pub seed: u64,
    /// Refuse to enumerate more ordered action profiles than this.
    pub max_sequences: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            suite: SuiteConfig::default(),
            random_profiles: 200,
            seed: DEFAULT_SEED,
            max_sequences: 1 << 20,
        }
    }
}

/// The worst profile found.
#[derive(Debug, Clone)]
pub struct DistortionReport {
    pub mechanism: String,
    pub best_ratio: f64,
    pub election: Election,
    pub profile: LocationProfile,
    pub expected_cost: f64,
    pub opt_committee: Committee,
    pub opt_cost: f64,
    /// Action profiles examined after deduplication.
    pub elections: usize,
    /// `(action profile, committee)` pairs solved plus random profiles.
    pub search_budget: u64,
    pub positions: usize,
}

impl DistortionReport {
    /// Re-evaluates the witness from scratch.
    pub fn recheck(&self, mech: &dyn Mechanism) -> Result<f64> {
        let cs = self.election.candidates();
        let out = mech.elect(&self.election)?;
        let e = out.expected_social_cost(&self.profile, cs)?;
        let (_, o) = opt_committee(&self.profile, cs, out.committee_size())?;
        ratio(e, o)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mechanism": self.mechanism,
            "n": self.election.n(),
            "m": self.election.m(),
            "sigma": self.election.candidates().sigma(),
            "best_ratio": float_json(self.best_ratio),
            "actions": self.election.one_based_actions(),
            "positions": self.profile.positions().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
            "expected_cost": self.expected_cost,
            "opt_committee": self.opt_committee.one_based(),
            "opt_cost": self.opt_cost,
            "elections": self.elections,
            "search_budget": self.search_budget,
            "positions_tested": self.positions,
        })
    }
}

/// JSON has no infinity; write it as a string.
pub fn float_json(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!("inf")
    }
}

struct Candidate {
    ratio: f64,
    index: (usize, usize),
    actions: Vec<usize>,
    assignment: Vec<usize>,
}

fn better(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(a), Some(b)) => {
            if b.ratio > a.ratio || (b.ratio == a.ratio && b.index < a.index) {
                Some(b)
            } else {
                Some(a)
            }
        }
        (a, None) => a,
        (None, b) => b,
    }
}

/// Searches every action profile of `n` voters against the position suite,
/// then `cfg.random_profiles` random truthful profiles.
pub fn distortion_search(
    mech: &dyn Mechanism,
    inst: &Instance,
    n: usize,
    cfg: &SearchConfig,
) -> Result<DistortionReport> {
    if n == 0 {
        return Err(Error::NoVoters);
    }
    let suite = PositionSuite::build(inst, &cfg.suite)?;
    let cs = &inst.candidates;
    let m = cs.m();
    let by_cand: Vec<Vec<usize>> = (0..m)
        .map(|k| (0..suite.len()).filter(|&p| suite.nearest[p].contains(&k)).collect())
        .collect();

    let profiles = action_profiles(mech, inst, n, cfg.max_sequences)?;
    let committees = Committee::all(m, profiles[0].1.committee_size());
    let solved = (profiles.len() * committees.len()) as u64;

    let best = profiles
        .par_iter()
        .enumerate()
        .map(|(idx, (actions, outcome))| {
            let counts = tally(actions, m);
            let e: Vec<f64> = suite.dists.iter().map(|d| outcome.voter_cost_from(d)).collect();
            let mut local = None;
            for (ci, c) in committees.iter().enumerate() {
                let cost: Vec<f64> = suite.dists.iter().map(|d| c.cost_from(d)).collect();
                let assignment = dinkelbach(&counts, &by_cand, &e, &cost);
                let rows: Vec<Vec<f64>> = actions.iter().map(|&a| suite.dists[assignment[a]].clone()).collect();
                let total: f64 = actions.iter().map(|&a| e[assignment[a]]).sum();
                let (_, o) = opt_from_dists(&rows, m, c.size());
                local = better(
                    local,
                    Some(Candidate {
                        ratio: ratio_unchecked(total, o),
                        index: (idx, ci),
                        actions: actions.clone(),
                        assignment,
                    }),
                );
            }
            local
        })
        .reduce(|| None, better)
        .expect("at least one profile");

    let mut best_ratio = best.ratio;
    let mut election = inst.election(best.actions.clone())?;
    let mut profile = LocationProfile::new(
        best.actions
            .iter()
            .map(|&a| suite.points[best.assignment[a]].clone())
            .collect(),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_profiles {
        let pts = random_points(cs, n, rand::Rng::gen(&mut rng));
        let actions: Vec<usize> = pts
            .iter()
            .map(|p| nearest_from(&(0..m).map(|k| cs.dist_to(p, k)).collect::<Vec<_>>())[0])
            .collect();
        let el = inst.election(actions)?;
        let x = LocationProfile::new(pts);
        let out = mech.elect(&el)?;
        let e = out.expected_social_cost(&x, cs)?;
        let (_, o) = opt_committee(&x, cs, out.committee_size())?;
        let r = ratio(e, o)?;
        if r > best_ratio {
            best_ratio = r;
            election = el;
            profile = x;
        }
    }

    let out = mech.elect(&election)?;
    let expected_cost = out.expected_social_cost(&profile, cs)?;
    let (opt_c, opt_cost) = opt_committee(&profile, cs, out.committee_size())?;
    Ok(DistortionReport {
        mechanism: mech.name().to_string(),
        best_ratio,
        election,
        profile,
        expected_cost,
        opt_committee: opt_c,
        opt_cost,
        elections: profiles.len(),
        search_budget: solved + cfg.random_profiles as u64,
        positions: suite.len(),
    })
}

/// One representative per count vector for anonymous mechanisms. Otherwise
/// every ordered profile, deduplicated by counts and outcome (the objective
/// depends on nothing else).
fn action_profiles(
    mech: &dyn Mechanism,
    inst: &Instance,
    n: usize,
    max_sequences: usize,
) -> Result<Vec<(Vec<usize>, Outcome)>> {
    let m = inst.candidates.m();
    let seqs: Vec<Vec<usize>> = if mech.is_anonymous() {
        compositions(n, m).iter().map(|c| sequence_from_counts(c)).collect()
    } else {
        let total = sequence_count(m, n)
            .filter(|&t| t <= max_sequences)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "{m}^{n} ordered profiles exceed the limit of {max_sequences}"
                ))
            })?;
        (0..total).map(|i| sequence_at(i, m, n)).collect()
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in seqs {
        let outcome = mech.elect(&inst.election(s.clone())?)?;
        let key = (
            tally(&s, m),
            outcome
                .lottery()
                .into_iter()
                .map(|(c, p)| (c.one_based(), p.to_bits()))
                .collect::<Vec<_>>(),
        );
        if seen.insert(key) {
            out.push((s, outcome));
        }
    }
    Ok(out)
}

/// Best position per candidate for `max sum n_k (e - lambda c)`, iterating
/// `lambda` to the optimal ratio. Entries for candidates without votes are 0.
fn dinkelbach(counts: &[usize], by_cand: &[Vec<usize>], e: &[f64], c: &[f64]) -> Vec<usize> {
    let active: Vec<usize> = (0..counts.len()).filter(|&k| counts[k] > 0).collect();
    let mut assign = vec![0; counts.len()];

    // all voters at zero committee cost with positive mechanism cost
    let mut zero = assign.clone();
    let mut ok = true;
    let mut ez = 0.0;
    for &k in &active {
        let pick = by_cand[k]
            .iter()
            .copied()
            .filter(|&p| c[p] <= ZERO_COST_TOL)
            .fold(None, |acc: Option<usize>, p| match acc {
                Some(q) if e[q] >= e[p] => Some(q),
                _ => Some(p),
            });
        match pick {
            Some(p) => {
                zero[k] = p;
                ez += counts[k] as f64 * e[p];
            }
            None => {
                ok = false;
                break;
            }
        }
    }
    if ok && ez > ZERO_COST_TOL {
        return zero;
    }

    let mut lambda = 0.0;
    let mut cur = assign.clone();
    for _ in 0..200 {
        let (mut se, mut sc) = (0.0, 0.0);
        for &k in &active {
            let mut best = by_cand[k][0];
            let mut val = e[best] - lambda * c[best];
            for &p in &by_cand[k][1..] {
                let v = e[p] - lambda * c[p];
                if v > val {
                    best = p;
                    val = v;
                }
            }
            cur[k] = best;
            se += counts[k] as f64 * e[best];
            sc += counts[k] as f64 * c[best];
        }
        if sc <= ZERO_COST_TOL {
            if se > ZERO_COST_TOL {
                return cur;
            }
            break;
        }
        let next = se / sc;
        if next <= lambda * (1.0 + 1e-14) + 1e-15 {
            if lambda == 0.0 {
                assign.clone_from(&cur);
            }
            break;
        }
        lambda = next;
        assign.clone_from(&cur);
    }
    assign
}
