//! The two-winner mechanisms, Random Dictator, and the count-based
//! ("independent") representation `q_{i,j}(n_i, n_j)` with its monotonicity
//! test.
//!
//! Mechanisms only ever see an [`Election`]: the votes and the candidate
//! locations, never voter positions.

use crate::enumerate::compositions;
use crate::error::{Error, Result};
use crate::geometry::{CandidateSet, Point};
use crate::model::{all_pairs, Committee, Election, LocationProfile, Pair, PairDistribution};

/// Slack allowed on a monotone step before it counts as a decrease.
pub const MONOTONE_TOL: f64 = 1e-12;

/// Number of votes per candidate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VoteCounts {
    counts: Vec<usize>,
    n: usize,
}

impl VoteCounts {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        let n = counts.iter().sum();
        if n == 0 {
            return Err(Error::NoVoters);
        }
        Ok(VoteCounts { counts, n })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> usize {
        self.counts[k]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.counts.len()
    }

    /// Candidates with at least one vote.
    pub fn support(&self) -> Vec<usize> {
        (0..self.m()).filter(|&k| self.counts[k] > 0).collect()
    }

    /// The candidate holding every vote, if there is one.
    pub fn unanimous(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c == self.n)
    }
}

/// Tallies the votes of an election.
pub fn counts_of(e: &Election) -> VoteCounts {
    let mut counts = vec![0; e.m()];
    for &a in e.actions() {
        counts[a] += 1;
    }
    VoteCounts { counts, n: e.n() }
}

/// What a mechanism returns for one election.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// A deterministic pair.
    Pair(Pair),
    /// A lottery over pairs.
    Pairs(PairDistribution),
    /// A lottery over single winners, indexed by candidate.
    Winners(Vec<f64>),
}

impl Outcome {
    /// The outcome as `(committee, probability)` entries with positive mass.
    pub fn lottery(&self) -> Vec<(Committee, f64)> {
        match self {
            Outcome::Pair(p) => vec![(Committee::Pair(p.sorted()), 1.0)],
            Outcome::Pairs(d) => d
                .iter()
                .filter(|&(_, p)| p > 0.0)
                .map(|(pair, p)| (Committee::Pair(pair), p))
                .collect(),
            Outcome::Winners(w) => w
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p > 0.0)
                .map(|(k, &p)| (Committee::Single(k), p))
                .collect(),
        }
    }

    pub fn committee_size(&self) -> usize {
        match self {
            Outcome::Winners(_) => 1,
            _ => 2,
        }
    }

    /// A deterministic outcome as a point mass; `None` for single winners.
    pub fn to_distribution(&self) -> Option<PairDistribution> {
        match self {
            Outcome::Pair(p) => Some(PairDistribution::point_mass(*p)),
            Outcome::Pairs(d) => Some(d.clone()),
            Outcome::Winners(_) => None,
        }
    }

    /// Expected cost of a voter at `x`.
    pub fn voter_cost(&self, x: &Point, cs: &CandidateSet) -> Result<f64> {
        cs.check_point(x)?;
        let dists: Vec<f64> = (0..cs.m()).map(|k| cs.dist_to(x, k)).collect();
        Ok(self.voter_cost_from(&dists))
    }

    pub(crate) fn voter_cost_from(&self, dists: &[f64]) -> f64 {
        match self {
            Outcome::Pair(p) => Committee::Pair(*p).cost_from(dists),
            Outcome::Pairs(d) => d
                .iter()
                .map(|(pair, p)| p * Committee::Pair(pair).cost_from(dists))
                .sum(),
            Outcome::Winners(w) => w.iter().zip(dists).map(|(p, d)| p * d).sum(),
        }
    }

    /// Expected social cost over a location profile.
    pub fn expected_social_cost(&self, x: &LocationProfile, cs: &CandidateSet) -> Result<f64> {
        x.positions().iter().map(|p| self.voter_cost(p, cs)).sum()
    }
}

/// A voting rule mapping an election to an [`Outcome`].
pub trait Mechanism: Send + Sync {
    /// Stable identifier, also used by the CLI.
    fn name(&self) -> &'static str;

    /// Whether the outcome depends only on the vote counts.
    fn is_anonymous(&self) -> bool;

    fn elect(&self, e: &Election) -> Result<Outcome>;
}

/// The all-votes-on-one-candidate rule shared by Two-Extremes and
/// Sequential Dictator: `(y_1, y_i)`, or `(y_1, y_2)` when `i = 1`.
fn unanimous_pair(i: usize) -> Pair {
    if i != 0 {
        Pair::new(0, i).expect("distinct")
    } else {
        Pair::new(0, 1).expect("distinct")
    }
}

/// Leftmost and rightmost voted candidates on a line.
pub fn two_extremes(e: &Election) -> Result<Pair> {
    if e.candidates().dim() != 1 {
        return Err(Error::InvalidParameter(format!(
            "Two-Extremes needs one-dimensional candidates, got dimension {}",
            e.candidates().dim()
        )));
    }
    let counts = counts_of(e);
    if let Some(i) = counts.unanimous() {
        return Ok(unanimous_pair(i));
    }
    let support = counts.support();
    Pair::new(support[0], *support.last().unwrap())
}

/// `q_{i,j}` of Pair-Independent. Handles the unanimous case (`1/(m-1)` for
/// every pair holding the unanimous candidate) as well as the general
/// formula.
pub fn pair_independent_q(n_i: usize, n_j: usize, n: usize, m: usize) -> f64 {
    if n_i == n || n_j == n {
        return 1.0 / (m as f64 - 1.0);
    }
    let (ni, nj, n) = (n_i as f64, n_j as f64, n as f64);
    ni / (n - nj) + nj / (n - ni) - (ni + nj) / n
}

/// The Pair-Independent lottery.
pub fn pair_independent(e: &Election) -> Result<PairDistribution> {
    independent_distribution(&PairIndependent, &counts_of(e))
}

/// Each candidate wins with probability `n_i / n`.
pub fn random_dictator(e: &Election) -> Vec<f64> {
    let counts = counts_of(e);
    let n = counts.n() as f64;
    counts.counts().iter().map(|&c| c as f64 / n).collect()
}

/// First two distinct votes in voter order.
pub fn sequential_dictator(e: &Election) -> Result<Pair> {
    let actions = e.actions();
    let first = actions[0];
    match actions.iter().find(|&&a| a != first) {
        Some(&second) => Pair::new(first, second),
        None => Ok(unanimous_pair(first)),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TwoExtremes;

#[derive(Debug, Clone, Copy, Default)]
pub struct PairIndependent;

#[derive(Debug, Clone, Copy, Default)]
pub struct RandomDictator;

#[derive(Debug, Clone, Copy, Default)]
pub struct SequentialDictator;

/// A deliberately non-monotone control: Pair-Independent applied to the
/// complemented counts `n - n_k` (total `(m-1) n`). It is a valid count-based
/// lottery for `m >= 3` but rewards candidates for losing votes.
#[derive(Debug, Clone, Copy, Default)]
pub struct InvertedPairIndependent;

impl Mechanism for TwoExtremes {
    fn name(&self) -> &'static str {
        "two-extremes"
    }
    fn is_anonymous(&self) -> bool {
        true
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        two_extremes(e).map(Outcome::Pair)
    }
}

impl Mechanism for PairIndependent {
    fn name(&self) -> &'static str {
        "pair-independent"
    }
    fn is_anonymous(&self) -> bool {
        true
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        pair_independent(e).map(Outcome::Pairs)
    }
}

impl Mechanism for RandomDictator {
    fn name(&self) -> &'static str {
        "random-dictator"
    }
    fn is_anonymous(&self) -> bool {
        true
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        Ok(Outcome::Winners(random_dictator(e)))
    }
}

impl Mechanism for SequentialDictator {
    fn name(&self) -> &'static str {
        "sequential-dictator"
    }
    fn is_anonymous(&self) -> bool {
        false
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        sequential_dictator(e).map(Outcome::Pair)
    }
}

impl Mechanism for InvertedPairIndependent {
    fn name(&self) -> &'static str {
        "inverted-pair-independent"
    }
    fn is_anonymous(&self) -> bool {
        true
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        if e.m() < 3 {
            return Err(Error::InvalidParameter(
                "inverted Pair-Independent needs m >= 3".into(),
            ));
        }
        independent_distribution(self, &counts_of(e)).map(Outcome::Pairs)
    }
}

/// A two-winner rule whose pair probabilities depend only on the two
/// members' vote counts (plus the fixed `n` and `m`).
pub trait IndependentMechanism: Send + Sync {
    /// Probability of the pair `(i, j)` when they hold `n_i` and `n_j` of
    /// `n` votes. Must also cover the unanimous case (`n_i = n` or
    /// `n_j = n`).
    fn q(&self, i: usize, j: usize, n_i: usize, n_j: usize, n: usize, m: usize) -> f64;
}

impl IndependentMechanism for PairIndependent {
    fn q(&self, _i: usize, _j: usize, n_i: usize, n_j: usize, n: usize, m: usize) -> f64 {
        pair_independent_q(n_i, n_j, n, m)
    }
}

impl IndependentMechanism for InvertedPairIndependent {
    fn q(&self, _i: usize, _j: usize, n_i: usize, n_j: usize, n: usize, m: usize) -> f64 {
        let total = ((m - 1) * n) as f64;
        let a = (n - n_i) as f64;
        let b = (n - n_j) as f64;
        a / (total - b) + b / (total - a) - (a + b) / total
    }
}

/// Any closure `(i, j, n_i, n_j, n, m) -> q` is an independent mechanism.
impl<F> IndependentMechanism for F
where
    F: Fn(usize, usize, usize, usize, usize, usize) -> f64 + Send + Sync,
{
    fn q(&self, i: usize, j: usize, n_i: usize, n_j: usize, n: usize, m: usize) -> f64 {
        self(i, j, n_i, n_j, n, m)
    }
}

/// Evaluates an independent mechanism on every pair. Fails if the result is
/// not a probability distribution.
pub fn independent_distribution<M: IndependentMechanism + ?Sized>(
    mech: &M,
    counts: &VoteCounts,
) -> Result<PairDistribution> {
    let (n, m) = (counts.n(), counts.m());
    PairDistribution::new(all_pairs(m).into_iter().map(|p| {
        let (i, j) = (p.first(), p.second());
        (p, mech.q(i, j, counts.get(i), counts.get(j), n, m))
    }))
}

/// Largest deviation of `sum_{k<l} q` from 1 over all count vectors of `n`
/// votes on `m` candidates, together with the smallest probability seen.
pub fn normalization_extremes<M: IndependentMechanism + ?Sized>(mech: &M, n: usize, m: usize) -> (f64, f64) {
    let mut worst_sum = 0.0_f64;
    let mut min_prob = f64::INFINITY;
    for c in compositions(n, m) {
        let mut total = 0.0;
        for p in all_pairs(m) {
            let (i, j) = (p.first(), p.second());
            let q = mech.q(i, j, c[i], c[j], n, m);
            min_prob = min_prob.min(q);
            total += q;
        }
        worst_sum = worst_sum.max((total - 1.0).abs());
    }
    (worst_sum, min_prob)
}

/// A step `q(before) -> q(after)` where the probability dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneViolation {
    pub pair: Pair,
    pub before: (usize, usize),
    pub after: (usize, usize),
    pub q_before: f64,
    pub q_after: f64,
}

/// First decreasing step of `q` over all pairs and feasible `(n_i, n_j)`
/// with `n_i + n_j <= n - 1`, incrementing either coordinate. The step into
/// the unanimous case (`n_i + 1 = n`) is included.
pub fn monotonicity_violation<M: IndependentMechanism + ?Sized>(
    mech: &M,
    n: usize,
    m: usize,
) -> Result<Option<MonotoneViolation>> {
    if n == 0 {
        return Err(Error::NoVoters);
    }
    if m < 2 {
        return Err(Error::TooFewCandidates(m));
    }
    for p in all_pairs(m) {
        let (i, j) = (p.first(), p.second());
        for n_i in 0..n {
            for n_j in 0..(n - n_i) {
                // the votes not on i or j must fit on the other candidates
                if m == 2 && n_i + n_j + 1 < n {
                    continue;
                }
                let base = mech.q(i, j, n_i, n_j, n, m);
                for (after, q_after) in [
                    ((n_i + 1, n_j), mech.q(i, j, n_i + 1, n_j, n, m)),
                    ((n_i, n_j + 1), mech.q(i, j, n_i, n_j + 1, n, m)),
                ] {
                    if q_after < base - MONOTONE_TOL {
                        return Ok(Some(MonotoneViolation {
                            pair: p,
                            before: (n_i, n_j),
                            after,
                            q_before: base,
                            q_after,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Whether `q` never decreases when either member gains a vote.
pub fn is_monotone<M: IndependentMechanism + ?Sized>(mech: &M, n: usize, m: usize) -> Result<bool> {
    Ok(monotonicity_violation(mech, n, m)?.is_none())
}

/// Adapts an [`IndependentMechanism`] into a [`Mechanism`].
pub struct CountBased<M> {
    pub inner: M,
    pub name: &'static str,
}

impl<M: IndependentMechanism> Mechanism for CountBased<M> {
    fn name(&self) -> &'static str {
        self.name
    }
    fn is_anonymous(&self) -> bool {
        true
    }
    fn elect(&self, e: &Election) -> Result<Outcome> {
        independent_distribution(&self.inner, &counts_of(e)).map(Outcome::Pairs)
    }
}

/// Mechanisms addressable by name.
pub fn by_name(name: &str) -> Option<Box<dyn Mechanism>> {
    let mech: Box<dyn Mechanism> = match name {
        "two-extremes" => Box::new(TwoExtremes),
        "pair-independent" => Box::new(PairIndependent),
        "random-dictator" => Box::new(RandomDictator),
        "sequential-dictator" => Box::new(SequentialDictator),
        "inverted-pair-independent" => Box::new(InvertedPairIndependent),
        _ => return None,
    };
    Some(mech)
}

pub const MECHANISM_NAMES: &[&str] = &[
    "two-extremes",
    "pair-independent",
    "random-dictator",
    "sequential-dictator",
    "inverted-pair-independent",
];

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::geometry::CandidateSet;

    fn line3() -> Arc<CandidateSet> {
        Arc::new(
            CandidateSet::new(vec![Point::scalar(-2.0), Point::scalar(0.0), Point::scalar(2.0)])
                .unwrap(),
        )
    }

    fn simplex4() -> Arc<CandidateSet> {
        Arc::new(
            CandidateSet::new(vec![
                Point::new(vec![1.0, 0.0, 0.0]).unwrap(),
                Point::new(vec![0.0, 1.0, 0.0]).unwrap(),
                Point::new(vec![0.0, 0.0, 1.0]).unwrap(),
                Point::new(vec![3.0, 3.0, 3.0]).unwrap(),
            ])
            .unwrap(),
        )
    }

    fn elect(cs: &Arc<CandidateSet>, votes: &[usize]) -> Election {
        Election::from_one_based(Arc::clone(cs), votes).unwrap()
    }

    fn pair(a: usize, b: usize) -> Pair {
        Pair::new(a - 1, b - 1).unwrap()
    }

    #[test]
    fn two_extremes_examples() {
        let cs = line3();
        assert_eq!(two_extremes(&elect(&cs, &[1, 3, 3])).unwrap(), pair(1, 3));
        assert_eq!(two_extremes(&elect(&cs, &[3, 3])).unwrap(), pair(1, 3));
        assert_eq!(two_extremes(&elect(&cs, &[1, 1, 1])).unwrap(), pair(1, 2));
        assert_eq!(two_extremes(&elect(&cs, &[2, 1, 2, 3])).unwrap(), pair(1, 3));
        assert!(two_extremes(&elect(&simplex4(), &[1, 2])).is_err());
    }

    #[test]
    fn pair_independent_examples() {
        let cs = Arc::new(
            CandidateSet::new(vec![
                Point::new(vec![1.0, 0.0]).unwrap(),
                Point::new(vec![0.0, 1.0]).unwrap(),
                Point::new(vec![3.0, 3.0]).unwrap(),
            ])
            .unwrap(),
        );
        let d = pair_independent(&elect(&cs, &[1, 2, 3])).unwrap();
        for (_, p) in d.iter() {
            assert!((p - 1.0 / 3.0).abs() < 1e-12);
        }
        let d = pair_independent(&elect(&simplex4(), &[1, 2, 3, 4])).unwrap();
        assert_eq!(d.len(), 6);
        for (_, p) in d.iter() {
            assert!((p - 1.0 / 6.0).abs() < 1e-12);
        }
        // zero-vote candidate in a mixed profile is never elected
        assert_eq!(pair_independent_q(2, 0, 3, 4), 0.0);
        let d = pair_independent(&elect(&simplex4(), &[1, 1, 2])).unwrap();
        assert!(d.prob(0, 2).abs() < 1e-15 && d.prob(2, 3).abs() < 1e-15);
        assert!((d.prob(0, 1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pair_independent_unanimous_branch() {
        let d = pair_independent(&elect(&simplex4(), &[2, 2, 2])).unwrap();
        for k in [0, 2, 3] {
            assert!((d.prob(1, k) - 1.0 / 3.0).abs() < 1e-12);
        }
        assert_eq!(d.prob(0, 2), 0.0);
    }

    #[test]
    fn random_dictator_examples() {
        let cs = line3();
        assert_eq!(random_dictator(&elect(&cs, &[1, 1, 1])), vec![1.0, 0.0, 0.0]);
        let third = 1.0 / 3.0;
        assert_eq!(random_dictator(&elect(&cs, &[1, 2, 3])), vec![third, third, third]);
        assert_eq!(random_dictator(&elect(&cs, &[1, 1, 2, 3])), vec![0.5, 0.25, 0.25]);
    }

    #[test]
    fn sequential_dictator_examples() {
        let cs = simplex4();
        assert_eq!(sequential_dictator(&elect(&cs, &[1, 2, 4, 4])).unwrap(), pair(1, 2));
        assert_eq!(sequential_dictator(&elect(&cs, &[3, 3, 3])).unwrap(), pair(1, 3));
        assert_eq!(sequential_dictator(&elect(&cs, &[1, 1])).unwrap(), pair(1, 2));
        let p = sequential_dictator(&elect(&cs, &[2, 1])).unwrap();
        assert_eq!((p.first(), p.second()), (1, 0));
        // not anonymous: swapping voters changes the outcome
        let a = sequential_dictator(&elect(&cs, &[2, 1, 3])).unwrap();
        let b = sequential_dictator(&elect(&cs, &[3, 1, 2])).unwrap();
        assert_ne!(a.key(), b.key());
    }

    #[test]
    fn counts_examples() {
        let cs = line3();
        assert_eq!(counts_of(&elect(&cs, &[1, 1, 2])).counts(), &[2, 1, 0]);
        let s = simplex4();
        assert_eq!(counts_of(&elect(&s, &[4, 4, 4, 4])).counts(), &[0, 0, 0, 4]);
        assert_eq!(counts_of(&elect(&s, &[1, 2, 3, 4])).counts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn pair_independent_is_monotone() {
        assert!(is_monotone(&PairIndependent, 6, 4).unwrap());
        let n = 6;
        let m = 4;
        let step = pair_independent_q(n, 0, n, m) - pair_independent_q(n - 1, 0, n, m);
        assert!((step - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn inverted_mechanism_is_a_distribution_but_not_monotone() {
        let (sum_err, min_p) = normalization_extremes(&InvertedPairIndependent, 6, 4);
        assert!(sum_err < 1e-9 && min_p >= -1e-12);
        let v = monotonicity_violation(&InvertedPairIndependent, 6, 4).unwrap().unwrap();
        assert!(v.q_after < v.q_before);
    }

    #[test]
    fn monotone_rejects_bad_sizes() {
        assert_eq!(is_monotone(&PairIndependent, 0, 4), Err(Error::NoVoters));
        assert_eq!(is_monotone(&PairIndependent, 3, 1), Err(Error::TooFewCandidates(1)));
    }

    #[test]
    fn closures_are_independent_mechanisms() {
        let proportional = |_: usize, _: usize, a: usize, b: usize, n: usize, m: usize| {
            (a + b) as f64 / ((m - 1) * n) as f64
        };
        assert!(is_monotone(&proportional, 5, 4).unwrap());
        let (err, _) = normalization_extremes(&proportional, 5, 4);
        assert!(err < 1e-12);
    }

    #[test]
    fn outcome_costs() {
        let cs = line3();
        let x = Point::scalar(-1.0);
        let o = Outcome::Winners(vec![0.5, 0.0, 0.5]);
        assert_eq!(o.voter_cost(&x, &cs).unwrap(), 2.0);
        assert_eq!(o.committee_size(), 1);
        let o = Outcome::Pair(pair(2, 3));
        assert_eq!(o.voter_cost(&x, &cs).unwrap(), 1.0);
        assert_eq!(o.lottery(), vec![(Committee::Pair(pair(2, 3)), 1.0)]);
    }
}
