//! Worst-case ratio search with a reproducible witness.
//!
//! cargo run --release --example distortion_search

use scv::verify::search::{distortion_search, SearchConfig};
use scv::{Instance, SequentialDictator, TwoExtremes};

fn main() -> scv::Result<()> {
    let cfg = SearchConfig::default();

    for n in 3..=6 {
        let rep = distortion_search(&TwoExtremes, &Instance::line3(), n, &cfg)?;
        println!("two-extremes n={n}: {:.6} (2n-3 = {})", rep.best_ratio, 2 * n - 3);
    }

    let inst = Instance::multi4(3.0)?;
    let rep = distortion_search(&SequentialDictator, &inst, 4, &cfg)?;
    println!(
        "sequential-dictator n=4 sigma={:.4}: {:.6} (2(n-2)sigma+1 = {:.6})",
        inst.sigma(),
        rep.best_ratio,
        4.0 * inst.sigma() + 1.0
    );
    println!("witness: {}", serde_json::to_string_pretty(&rep.to_json()).expect("json"));
    println!("recheck: {:.6}", rep.recheck(&SequentialDictator)?);
    Ok(())
}
