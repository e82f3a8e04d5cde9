//! End-to-end tightness certification: the claimed ratio bound, the
//! exhaustive minimum, and whether a witness attains the bound exactly.

use shadowlab::search::certify_bound;
use shadowlab::{format, Result};

fn main() -> Result<()> {
    // long interval: at (k, t) = (3, 3) the threshold degree is 4 and the
    // clique on 4 vertices is optimal
    let long = certify_bound(3, 4, Some(3), 6)?;
    println!(
        "long interval  k=3 t=3 d=4:  claimed {} via {}, found {}, attained: {}, sound: {}",
        long.claimed, long.claimed_regime, long.min_ratio, long.attained, long.sound
    );

    // short interval: at (k, t, d) = (3, 4, 9) the clique on 6 vertices
    // minus a perfect matching is optimal
    let short = certify_bound(3, 9, Some(4), 6)?;
    println!(
        "short interval k=3 t=4 d=9:  claimed {} via {}, found {}, attained: {}, sound: {}",
        short.claimed, short.claimed_regime, short.min_ratio, short.attained, short.sound
    );
    println!("witness:");
    print!("{}", format::to_text(&short.witness));

    // low degree: d < k, matchings and near-matchings
    let low = certify_bound(3, 2, None, 8)?;
    println!(
        "low degree     k=3 d=2:      claimed {} via {}, found {}, attained: {}, sound: {}",
        low.claimed, low.claimed_regime, low.min_ratio, low.attained, low.sound
    );
    Ok(())
}
