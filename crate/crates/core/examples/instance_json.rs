//! Loading a candidate set with votes and positions from JSON, as the
//! command line does.
//!
//! cargo run --example instance_json

use scv::cli::input::load_instance;
use scv::{by_name, LocationProfile};

fn main() {
    let path = std::env::temp_dir().join("scv_example_instance.json");
    std::fs::write(
        &path,
        r#"{
  "dimension": 2,
  "candidates": [[0, 0], [1, 0], [0, 1], [3, 3]],
  "actions": [1, 2, 4],
  "positions": [[0.1, 0], [0.8, 0.1], [2.5, 2.9]]
}"#,
    )
    .expect("write temp file");

    let loaded = load_instance(path.to_str().expect("utf-8 path"), None, None, None).expect("valid instance");
    let inst = &loaded.instance;
    println!("{}: m = {}, sigma = {:.4}", loaded.label, inst.candidates.m(), inst.sigma());

    let e = inst.election(loaded.actions.expect("actions")).expect("valid votes");
    let x = LocationProfile::new(loaded.positions.expect("positions"));
    let mech = by_name("pair-independent").expect("known mechanism");
    let out = mech.elect(&e).expect("elects");
    for (c, p) in out.lottery() {
        println!("  {c}: {p:.4}");
    }
    println!("E[SC] = {:.4}", out.expected_social_cost(&x, &inst.candidates).expect("consistent"));
    std::fs::remove_file(&path).ok();
}
