//! Exhaustive deviation checks: the four mechanisms pass, the inverted
//! control does not.
//!
//! cargo run --release --example strategy_proofness

use scv::verify::{check_strategy_proof, SpConfig};
use scv::{by_name, Instance};

fn main() -> scv::Result<()> {
    let cfg = SpConfig::default();
    let instances = [Instance::line3(), Instance::line4(9.0)?, Instance::multi4(3.0)?];
    for inst in &instances {
        for name in ["pair-independent", "random-dictator", "sequential-dictator", "inverted-pair-independent"] {
            let mech = by_name(name).expect("known mechanism");
            let rep = check_strategy_proof(mech.as_ref(), inst, &cfg)?;
            println!(
                "{:?} {name:26} {} violations, {} contexts x {} positions",
                inst.kind, rep.violation_count, rep.contexts, rep.positions
            );
            if let Some(v) = rep.violations.first() {
                let r = v.record();
                println!(
                    "    voter {} at {:?} in {:?}: {} -> {} lowers cost {:.4} -> {:.4}",
                    r.voter, r.position, r.actions, r.truthful_action, r.deviation, r.truthful_cost, r.deviation_cost
                );
            }
        }
    }
    Ok(())
}
