//! Shadows, degrees, links and components of a small 3-uniform family.

use shadowlab::construct::clique_minus_matchings;
use shadowlab::{Hypergraph, Result};

fn main() -> Result<()> {
    // the clique on 6 vertices minus one perfect matching: 18 edges
    let h = clique_minus_matchings(3, 6, 1)?;
    println!("family: k={} n={} with {} edges", h.k(), h.n(), h.len());

    let shadow = h.shadow()?;
    println!("shadow: {} pairs, ratio {}", shadow.len(), h.shadow_ratio()?);

    for v in 1..=h.n() {
        println!("  deg({v}) = {}", h.degree(v)?);
    }
    println!("max degree: {}", h.max_degree());

    // the link of a vertex is a (k-1)-uniform family of size deg(v)
    let link = h.link(1)?;
    println!("link of vertex 1: {}-uniform, {} edges", link.k(), link.len());
    println!("its shadow has {} vertices-as-sets", link.shadow()?.len());

    // two disjoint triangles-of-triples: components split along shared pairs
    let split = Hypergraph::from_edge_lists(
        3,
        8,
        &[vec![1, 2, 3], vec![1, 2, 4], vec![5, 6, 7], vec![5, 6, 8]],
    )?;
    let comps = split.components();
    println!("a disconnected family breaks into {} components:", comps.len());
    for c in &comps {
        let sizes: Vec<String> = c.edges().iter().map(|e| format!("{:?}", e.vertices())).collect();
        println!("  {}", sizes.join(" "));
    }
    Ok(())
}
