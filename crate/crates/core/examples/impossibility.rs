//! The 0/1 constraint system behind the deterministic impossibility, its
//! parity certificate and the fractional control.
//!
//! cargo run --example impossibility

use scv::verify::impossibility::deterministic_impossibility;

fn main() -> scv::Result<()> {
    let cert = deterministic_impossibility(3.0)?;
    println!("{} constraints", cert.constraints.len());
    for c in cert.constraints.iter().take(5) {
        println!("  {c}");
    }
    for b in &cert.branches {
        let u: Vec<String> = b.unknowns.iter().map(|v| v.to_string()).collect();
        println!(
            "elected {} (case {}): unknowns {}, unsat after {} nodes",
            b.elected,
            b.case,
            u.join(", "),
            b.nodes
        );
    }
    if let Some(b) = cert.branches.first() {
        for line in &b.derivation {
            println!("    {line}");
        }
    }
    println!("UNSAT: {}", cert.is_unsat());
    println!("fractional relaxation SAT: {}", cert.fractional.sat());
    Ok(())
}
