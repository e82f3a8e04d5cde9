//! The exhaustive minimizer: minimum shadow ratio and minimum shadow size
//! over all families with bounded degree on a bounded universe.

use shadowlab::kknum::shadow_function;
use shadowlab::search::{enumerate_min_ratio, enumerate_min_shadow, SearchSpec};
use shadowlab::{format, Result};

fn main() -> Result<()> {
    // at degree bound 4 on 6 vertices, nothing beats the clique on 4
    let result = enumerate_min_ratio(SearchSpec::new(3, 6, 4))?;
    println!(
        "min ratio for k=3, n<=6, max degree <= 4: {} ({} nodes, exhaustive: {})",
        result.value.as_ratio().unwrap(),
        result.nodes_explored,
        result.exhaustive
    );
    print!("{}", format::to_text(&result.witness));

    // fixing the size instead recovers the Kruskal-Katona optimum
    println!();
    for m in 1..=10u64 {
        let result = enumerate_min_shadow(SearchSpec::new(3, 6, m).with_size(m))?;
        let found = result.value.as_shadow_size().unwrap();
        println!("min shadow at size {m}: {found} (F_3({m}) = {})", shadow_function(m, 3));
    }

    // extra threads partition the tree; the answer is deterministic
    println!();
    let threaded = enumerate_min_ratio(SearchSpec::new(3, 6, 9).with_threads(4))?;
    println!(
        "min ratio for k=3, n<=6, max degree <= 9 with 4 threads: {}",
        threaded.value.as_ratio().unwrap()
    );
    Ok(())
}
