//! Every named family generator, with its shadow statistics.

use shadowlab::construct::{
    clique, clique_minus_matchings, low_degree_extremal, prop16_family, shifted,
};
use shadowlab::{Hypergraph, Result};

fn describe(name: &str, h: &Hypergraph) -> Result<()> {
    println!(
        "{name}: k={} n={} m={} shadow={} max_degree={} ratio={}",
        h.k(),
        h.n(),
        h.len(),
        h.shadow()?.len(),
        h.max_degree(),
        h.shadow_ratio()?
    );
    Ok(())
}

fn main() -> Result<()> {
    // colex prefixes attain the Kruskal-Katona bound
    describe("shifted(3, 17)", &shifted(3, 17))?;

    // all k-subsets of [n]
    describe("clique(3, 6)", &clique(3, 6)?)?;

    // disjoint blocks on fresh (k+1)-sets, extremal in the low-degree regime
    describe("low_degree_extremal(3, 2, 5)", &low_degree_extremal(3, 2, 5)?)?;

    // the short-interval extremal candidate: remove s perfect matchings
    describe(
        "clique_minus_matchings(3, 6, 1)",
        &clique_minus_matchings(3, 6, 1)?,
    )?;
    describe(
        "clique_minus_matchings(3, 6, 2)",
        &clique_minus_matchings(3, 6, 2)?,
    )?;

    // a shifted family whose ratio beats every clique, with three degree
    // classes
    let p = prop16_family(3, 4)?;
    describe("prop16_family(3, 4)", &p)?;
    let degrees: Vec<u64> = (1..=p.n())
        .map(|v| p.degree(v))
        .collect::<Result<_>>()?;
    println!("  degree sequence: {degrees:?}");
    Ok(())
}
