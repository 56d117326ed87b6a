//! Random Dictator passes the uniqueness check; a shifted rule gets an
//! infinite-distortion witness.
//!
//! cargo run --example random_dictator

use scv::verify::dictator::random_dictator_uniqueness_check;
use scv::RandomDictator;

fn main() -> scv::Result<()> {
    let n = 5;
    let rep = random_dictator_uniqueness_check(&RandomDictator, n, 4, 3.0)?;
    println!("random dictator: slope {:?}, intercepts {:?}, passes {}", rep.slope, rep.intercepts, rep.is_random_dictator(n));

    // mass 0.1 on y1 regardless of votes
    let shifted = |k: usize, c: usize, n: usize, _m: usize| {
        let b = if k == 0 { 0.1 } else { 0.0 };
        b + 0.9 * c as f64 / n as f64
    };
    let rep = random_dictator_uniqueness_check(&shifted, n, 4, 3.0)?;
    let w = rep.witness.expect("nonzero intercept");
    println!(
        "shifted: all voters at y{}: E[SC] = {:.4}, OPT = {}",
        w.candidate + 1,
        w.expected_cost,
        w.opt_cost
    );
    Ok(())
}
