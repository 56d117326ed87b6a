//! Candidates, votes, voter positions and the optimal pair.
//!
//! cargo run --example geometry_model

use std::sync::Arc;

use scv::model::truthful_actions;
use scv::{opt, social_cost, CandidateSet, Election, LocationProfile, Pair, Point};

fn main() -> scv::Result<()> {
    let cs = Arc::new(CandidateSet::new(vec![
        Point::new(vec![0.0, 0.0])?,
        Point::new(vec![1.0, 0.0])?,
        Point::new(vec![0.0, 2.0])?,
    ])?);
    println!("d_min = {}, d_max = {:.4}, sigma = {:.4}", cs.d_min(), cs.d_max(), cs.sigma());

    let x = LocationProfile::new(vec![
        Point::new(vec![0.1, 0.1])?,
        Point::new(vec![0.9, -0.2])?,
        Point::new(vec![0.2, 1.7])?,
    ]);
    let votes = truthful_actions(&x, &cs)?;
    let e = Election::new(Arc::clone(&cs), votes)?;
    println!("truthful votes (1-based): {:?}", e.one_based_actions());

    for (k, l) in [(0, 1), (0, 2), (1, 2)] {
        let p = Pair::new(k, l)?;
        println!("SC{} = {:.4}", p, social_cost(p, &x, &cs)?);
    }
    let (best, cost) = opt(&x, &cs)?;
    println!("OPT = {best} with cost {cost:.4}");
    Ok(())
}
