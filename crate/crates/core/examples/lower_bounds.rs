//! Closed-form line bounds, the balanced far profile and the 7/3 minimax.
//!
//! cargo run --release --example lower_bounds

use scv::verify::bounds::{
    line_lower_bound, line_scale, line_two_elections, pair_independent_ratio_instance3,
    seven_thirds_minimax,
};
use scv::{Instance, PairIndependent};

fn main() -> scv::Result<()> {
    println!("{:>4} {:>8} {:>12} {:>12} {:>10}", "n", "sigma", "randomized", "deterministic", "scale");
    for n in [12, 36, 60] {
        for sigma in [9.0, 100.0, 400.0] {
            println!(
                "{n:>4} {sigma:>8} {:>12.4} {:>12.4} {:>10.4}",
                line_lower_bound(n, sigma, false)?,
                line_lower_bound(n, sigma, true)?,
                line_scale(n, sigma)
            );
        }
    }

    let two = line_two_elections(&PairIndependent, 9.0, 10, 2)?;
    println!(
        "pair-independent, sigma=9 n=10 k=2: max({:.4}, {:.4}) = {:.4} >= {:.4}",
        two.gamma1,
        two.gamma2,
        two.worse(),
        two.bound
    );

    for r in [3.0, 5.0, 10.0] {
        let sigma = Instance::simplex(4, r)?.sigma();
        let v = pair_independent_ratio_instance3(4, r, 3)?;
        println!("r={r}: ratio {v:.4} = (sigma+2)/3 = {:.4} >= sigma/6 = {:.4}", (sigma + 2.0) / 3.0, sigma / 6.0);
    }

    let mm = seven_thirds_minimax(0.01)?;
    println!("7/3 minimax: {:.4} at {:?}", mm.value, mm.argmin);
    Ok(())
}
