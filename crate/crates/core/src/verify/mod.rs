//! Checks that back the theory up numerically: strategy-proofness by
//! deviation search, worst-case distortion search, and the closed-form lower
//! bounds and impossibility arguments.

pub mod bounds;
pub mod dictator;
pub mod impossibility;
pub mod search;
pub mod sp;
pub mod suite;

pub use sp::{check_strategy_proof, SpConfig, SpReport, SpViolation};
pub use suite::{PositionSuite, SuiteConfig};
