//! Elections, consistent location profiles, social cost and distortion ratios.
//!
//! Candidate and voter indices are 0-based throughout the library. Anything
//! meant for people (`Display`, JSON reports, the CLI) shows them 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CandidateSet, Point};

/// Two distances within this band count as a tie.
pub const TIE_TOL: f64 = 1e-9;

/// Costs at or below this are treated as zero when forming ratios.
pub const ZERO_COST_TOL: f64 = 1e-12;

/// Tolerance on the total mass of a distribution.
pub const NORMALIZATION_TOL: f64 = 1e-9;

/// Two distinct candidate indices. The order is kept as produced (some
/// mechanisms report `(a_1, a_j)`), but cost and equality of committees only
/// depend on [`Pair::key`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    first: usize,
    second: usize,
}

impl Pair {
    pub fn new(first: usize, second: usize) -> Result<Self> {
        if first == second {
            return Err(Error::DegeneratePair(first + 1));
        }
        Ok(Pair { first, second })
    }

    pub fn first(self) -> usize {
        self.first
    }

    pub fn second(self) -> usize {
        self.second
    }

    /// The unordered pair as `(min, max)`.
    pub fn key(self) -> (usize, usize) {
        (self.first.min(self.second), self.first.max(self.second))
    }

    pub fn sorted(self) -> Pair {
        let (first, second) = self.key();
        Pair { first, second }
    }

    pub fn contains(self, k: usize) -> bool {
        self.first == k || self.second == k
    }

    /// 1-based indices for reports.
    pub fn one_based(self) -> [usize; 2] {
        [self.first + 1, self.second + 1]
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(y{}, y{})", self.first + 1, self.second + 1)
    }
}

/// An elected committee: a pair, or a single winner for single-winner rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Committee {
    Single(usize),
    Pair(Pair),
}

impl Committee {
    pub fn size(self) -> usize {
        match self {
            Committee::Single(_) => 1,
            Committee::Pair(_) => 2,
        }
    }

    pub fn contains(self, k: usize) -> bool {
        match self {
            Committee::Single(a) => a == k,
            Committee::Pair(p) => p.contains(k),
        }
    }

    /// Distance from `x` to the nearer member.
    pub fn cost(self, x: &Point, cs: &CandidateSet) -> Result<f64> {
        cs.check_point(x)?;
        self.check_range(cs.m())?;
        Ok(self.cost_unchecked(x, cs))
    }

    pub(crate) fn cost_unchecked(self, x: &Point, cs: &CandidateSet) -> f64 {
        match self {
            Committee::Single(a) => cs.dist_to(x, a),
            Committee::Pair(p) => cs.dist_to(x, p.first).min(cs.dist_to(x, p.second)),
        }
    }

    /// Same as [`Committee::cost`] but from precomputed candidate distances.
    pub(crate) fn cost_from(self, dists: &[f64]) -> f64 {
        match self {
            Committee::Single(a) => dists[a],
            Committee::Pair(p) => dists[p.first].min(dists[p.second]),
        }
    }

    fn check_range(self, m: usize) -> Result<()> {
        let check = |k: usize| {
            if k >= m {
                Err(Error::CandidateOutOfRange { index: k, m })
            } else {
                Ok(())
            }
        };
        match self {
            Committee::Single(a) => check(a),
            Committee::Pair(p) => check(p.first).and(check(p.second)),
        }
    }

    /// 1-based member list for reports.
    pub fn one_based(self) -> Vec<usize> {
        match self {
            Committee::Single(a) => vec![a + 1],
            Committee::Pair(p) => p.sorted().one_based().to_vec(),
        }
    }

    /// All committees of the given size (1 or 2) over `m` candidates, in
    /// lexicographic order.
    pub fn all(m: usize, size: usize) -> Vec<Committee> {
        match size {
            1 => (0..m).map(Committee::Single).collect(),
            _ => all_pairs(m).into_iter().map(Committee::Pair).collect(),
        }
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Committee::Single(a) => write!(f, "y{}", a + 1),
            Committee::Pair(p) => write!(f, "{}", p.sorted()),
        }
    }
}

/// All `m(m-1)/2` sorted pairs in lexicographic order.
pub fn all_pairs(m: usize) -> Vec<Pair> {
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for k in 0..m {
        for l in (k + 1)..m {
            out.push(Pair {
                first: k,
                second: l,
            });
        }
    }
    out
}

/// A candidate set together with the candidate each voter voted for.
#[derive(Debug, Clone, PartialEq)]
pub struct Election {
    candidates: Arc<CandidateSet>,
    actions: Vec<usize>,
}

impl Election {
    pub fn new(candidates: Arc<CandidateSet>, actions: Vec<usize>) -> Result<Self> {
        if actions.is_empty() {
            return Err(Error::NoVoters);
        }
        let m = candidates.m();
        if let Some(&bad) = actions.iter().find(|&&a| a >= m) {
            return Err(Error::CandidateOutOfRange { index: bad, m });
        }
        Ok(Election {
            candidates,
            actions,
        })
    }

    /// Builds an election from 1-based votes, as written in the JSON format.
    pub fn from_one_based(candidates: Arc<CandidateSet>, actions: &[usize]) -> Result<Self> {
        let m = candidates.m();
        let zero: Result<Vec<usize>> = actions
            .iter()
            .map(|&a| {
                if a == 0 || a > m {
                    Err(Error::CandidateOutOfRange { index: a, m })
                } else {
                    Ok(a - 1)
                }
            })
            .collect();
        Election::new(candidates, zero?)
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn candidates_arc(&self) -> &Arc<CandidateSet> {
        &self.candidates
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn n(&self) -> usize {
        self.actions.len()
    }

    pub fn m(&self) -> usize {
        self.candidates.m()
    }

    /// Same candidates, different votes.
    pub fn with_actions(&self, actions: Vec<usize>) -> Result<Self> {
        Election::new(Arc::clone(&self.candidates), actions)
    }

    pub fn one_based_actions(&self) -> Vec<usize> {
        self.actions.iter().map(|a| a + 1).collect()
    }
}

/// Voter locations `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LocationProfile {
    positions: Vec<Point>,
}

impl LocationProfile {
    pub fn new(positions: Vec<Point>) -> Self {
        LocationProfile { positions }
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn push(&mut self, p: Point) {
        self.positions.push(p);
    }

    fn check(&self, cs: &CandidateSet) -> Result<()> {
        self.positions.iter().try_for_each(|p| cs.check_point(p))
    }
}

/// Probability mass over unordered candidate pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PairDistribution {
    probs: BTreeMap<(usize, usize), f64>,
}

impl PairDistribution {
    /// Validates and builds a distribution; entries for the same unordered
    /// pair are accumulated.
    pub fn new(entries: impl IntoIterator<Item = (Pair, f64)>) -> Result<Self> {
        let mut probs = BTreeMap::new();
        for (pair, p) in entries {
            if !p.is_finite() || !(-ZERO_COST_TOL..=1.0 + NORMALIZATION_TOL).contains(&p) {
                return Err(Error::InvalidDistribution(format!(
                    "probability {p} for {pair} outside [0, 1]"
                )));
            }
            *probs.entry(pair.key()).or_insert(0.0) += p;
        }
        let total: f64 = probs.values().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {total}"
            )));
        }
        Ok(PairDistribution { probs })
    }

    pub fn point_mass(pair: Pair) -> Self {
        let mut probs = BTreeMap::new();
        probs.insert(pair.key(), 1.0);
        PairDistribution { probs }
    }

    /// Probability of the unordered pair `{k, l}` (0 when absent).
    pub fn prob(&self, k: usize, l: usize) -> f64 {
        let key = (k.min(l), k.max(l));
        self.probs.get(&key).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pair, f64)> + '_ {
        self.probs.iter().map(|(&(k, l), &p)| {
            (
                Pair {
                    first: k,
                    second: l,
                },
                p,
            )
        })
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Indices of the candidates nearest to `x`, including everything within
/// [`TIE_TOL`] of the minimum distance.
pub fn nearest_candidates(x: &Point, cs: &CandidateSet) -> Result<Vec<usize>> {
    cs.check_point(x)?;
    Ok(nearest_unchecked(x, cs))
}

pub(crate) fn nearest_unchecked(x: &Point, cs: &CandidateSet) -> Vec<usize> {
    let dists: Vec<f64> = (0..cs.m()).map(|k| cs.dist_to(x, k)).collect();
    nearest_from(&dists)
}

pub(crate) fn nearest_from(dists: &[f64]) -> Vec<usize> {
    let best = dists.iter().copied().fold(f64::INFINITY, f64::min);
    (0..dists.len())
        .filter(|&k| dists[k] <= best + TIE_TOL)
        .collect()
}

/// Whether every voter's vote is one of the nearest candidates.
pub fn is_consistent(x: &LocationProfile, e: &Election) -> Result<bool> {
    Ok(first_inconsistency(x, e)?.is_none())
}

/// Like [`is_consistent`] but returns the first offending voter as an error
/// value for diagnostics.
pub fn check_consistent(x: &LocationProfile, e: &Election) -> Result<()> {
    match first_inconsistency(x, e)? {
        None => Ok(()),
        Some((i, nearest)) => Err(Error::Inconsistent {
            voter: i + 1,
            voted: e.actions()[i] + 1,
            nearest: nearest.iter().map(|k| k + 1).collect(),
        }),
    }
}

fn first_inconsistency(x: &LocationProfile, e: &Election) -> Result<Option<(usize, Vec<usize>)>> {
    if x.n() != e.n() {
        return Err(Error::LengthMismatch {
            what: "location profile",
            expected: e.n(),
            got: x.n(),
        });
    }
    let cs = e.candidates();
    x.check(cs)?;
    for (i, (p, &a)) in x.positions().iter().zip(e.actions()).enumerate() {
        let nearest = nearest_unchecked(p, cs);
        if !nearest.contains(&a) {
            return Ok(Some((i, nearest)));
        }
    }
    Ok(None)
}

/// Assigns every voter the lowest-indexed nearest candidate.
pub fn truthful_actions(x: &LocationProfile, cs: &CandidateSet) -> Result<Vec<usize>> {
    x.check(cs)?;
    Ok(x.positions()
        .iter()
        .map(|p| nearest_unchecked(p, cs)[0])
        .collect())
}

/// A voter's cost for an elected pair: distance to the nearer winner.
pub fn pair_cost(pair: Pair, x: &Point, cs: &CandidateSet) -> Result<f64> {
    Committee::Pair(pair).cost(x, cs)
}

/// Sum of [`pair_cost`] over all voters.
pub fn social_cost(pair: Pair, x: &LocationProfile, cs: &CandidateSet) -> Result<f64> {
    committee_social_cost(Committee::Pair(pair), x, cs)
}

pub fn committee_social_cost(c: Committee, x: &LocationProfile, cs: &CandidateSet) -> Result<f64> {
    x.check(cs)?;
    c.check_range(cs.m())?;
    Ok(x.positions().iter().map(|p| c.cost_unchecked(p, cs)).sum())
}

/// Optimal pair by exhaustive enumeration; ties go to the lexicographically
/// smallest pair.
pub fn opt(x: &LocationProfile, cs: &CandidateSet) -> Result<(Pair, f64)> {
    match opt_committee(x, cs, 2)? {
        (Committee::Pair(p), c) => Ok((p, c)),
        _ => unreachable!("size-2 committees are pairs"),
    }
}

/// Optimal committee of size 1 or 2, lexicographic tie-break.
pub fn opt_committee(x: &LocationProfile, cs: &CandidateSet, size: usize) -> Result<(Committee, f64)> {
    if !(1..=2).contains(&size) {
        return Err(Error::InvalidParameter(format!(
            "committee size must be 1 or 2, got {size}"
        )));
    }
    x.check(cs)?;
    let dists: Vec<Vec<f64>> = x
        .positions()
        .iter()
        .map(|p| (0..cs.m()).map(|k| cs.dist_to(p, k)).collect())
        .collect();
    Ok(opt_from_dists(&dists, cs.m(), size))
}

/// OPT from a per-voter table of candidate distances. Strict `<` keeps the
/// first (lexicographically smallest) minimiser.
pub(crate) fn opt_from_dists(dists: &[Vec<f64>], m: usize, size: usize) -> (Committee, f64) {
    let mut best: Option<(Committee, f64)> = None;
    for c in Committee::all(m, size) {
        let cost: f64 = dists.iter().map(|d| c.cost_from(d)).sum();
        if best.map_or(true, |(_, b)| cost < b) {
            best = Some((c, cost));
        }
    }
    best.expect("at least one committee")
}

/// `sum p_{k,l} SC((k,l), x)`.
pub fn expected_social_cost(d: &PairDistribution, x: &LocationProfile, cs: &CandidateSet) -> Result<f64> {
    let mut total = 0.0;
    for (pair, p) in d.iter() {
        if p != 0.0 {
            total += p * social_cost(pair, x, cs)?;
        }
    }
    Ok(total)
}

/// Distortion ratio with explicit handling of zero optimal cost: `0/0` is 1,
/// positive over zero is infinite.
pub fn ratio(mechanism_cost: f64, opt_cost: f64) -> Result<f64> {
    if mechanism_cost < 0.0 || mechanism_cost.is_nan() {
        return Err(Error::NegativeCost(mechanism_cost));
    }
    if opt_cost < 0.0 || opt_cost.is_nan() {
        return Err(Error::NegativeCost(opt_cost));
    }
    Ok(ratio_unchecked(mechanism_cost, opt_cost))
}

pub(crate) fn ratio_unchecked(mechanism_cost: f64, opt_cost: f64) -> f64 {
    if opt_cost > ZERO_COST_TOL {
        mechanism_cost / opt_cost
    } else if mechanism_cost > ZERO_COST_TOL {
        f64::INFINITY
    } else {
        1.0
    }
}
