//! The degree-regime bound classifier: for each (k, d), every applicable
//! lower bound on the shadow ratio, and which one wins.

use shadowlab::bounds::best_bound;
use shadowlab::{Ratio, Result};

fn main() -> Result<()> {
    for (k, d) in [
        (2u32, Ratio::from(5u64)),
        (3, Ratio::from(2u64)),
        (3, Ratio::from(4u64)),
        (3, Ratio::from(9u64)),
        (4, "7/2".parse().unwrap()),
        (5, Ratio::from(126u64)),
    ] {
        let report = best_bound(k, &d)?;
        println!("k = {k}, degree bound d = {d}:");
        for entry in &report.bounds {
            let marker = if entry.regime == report.best.regime { " <- best" } else { "" };
            println!(
                "  {:<22} {:<14} [{}]{}",
                entry.regime.to_string(),
                entry.value.to_string(),
                entry.theorem,
                marker
            );
        }
        println!();
    }
    Ok(())
}
