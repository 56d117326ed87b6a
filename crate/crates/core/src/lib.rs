//! Two-winner elections where every voter names a single candidate.
//!
//! Candidates and voters live in Euclidean space. A voter's cost is the
//! distance to the nearer of the two winners, and a mechanism is judged by
//! its distortion: expected social cost over the optimal social cost, in the
//! worst case over voter positions consistent with the votes.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod instances;
pub mod mechanism;
pub mod model;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{distance, midpoint, sigma, CandidateSet, Point};
pub use instances::{Instance, InstanceKind, NamedProfile};
pub use mechanism::{
    by_name, IndependentMechanism, InvertedPairIndependent, Mechanism, Outcome, PairIndependent,
    RandomDictator, SequentialDictator, TwoExtremes, VoteCounts,
};
pub use model::{
    expected_social_cost, nearest_candidates, opt, social_cost, Committee, Election,
    LocationProfile, Pair, PairDistribution,
};
