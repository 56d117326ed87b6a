//! The four mechanisms on one election, and their cost on one profile.
//!
//! cargo run --example mechanisms

use scv::model::opt_committee;
use scv::{by_name, Instance, LocationProfile, Point};

fn main() -> scv::Result<()> {
    let inst = Instance::line3();
    // votes y1, y2, y2, y3
    let e = inst.election(vec![0, 1, 1, 2])?;
    let x = LocationProfile::new([-1.0, 0.0, 0.0, 2.0].map(Point::scalar).to_vec());

    for name in ["two-extremes", "pair-independent", "random-dictator", "sequential-dictator"] {
        let mech = by_name(name).expect("known mechanism");
        let out = mech.elect(&e)?;
        let lottery: Vec<String> = out
            .lottery()
            .iter()
            .map(|(c, p)| format!("{c}:{p:.3}"))
            .collect();
        let cost = out.expected_social_cost(&x, &inst.candidates)?;
        let (_, o) = opt_committee(&x, &inst.candidates, out.committee_size())?;
        println!("{name:20} {:40} E[SC] = {cost:.3}  ratio = {:.3}", lottery.join(" "), cost / o);
    }
    Ok(())
}
