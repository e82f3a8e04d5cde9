//! Generators for the concrete hypergraph families: colex shifted families,
//! cliques, the low-degree extremal blocks, cliques minus perfect matchings,
//! and the nonregular shifted family with three degree classes.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::kknum::binomial;

/// Position of a k-subset in the colexicographic enumeration.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ColexRank {
    pub k: u32,
    pub rank: u64,
}

impl ColexRank {
    /// Rank of an edge: the sum of C(v_i - 1, i) over the i-th smallest
    /// vertex (i 1-based), the greedy cascade read off the set.
    pub fn of(edge: &EdgeSet) -> Self {
        let vertices = edge.vertices();
        let rank = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| binomial(v as u64 - 1, i as u64 + 1))
            .sum();
        ColexRank { k: vertices.len() as u32, rank }
    }

    /// The strictly increasing k-subset at this rank.
    pub fn unrank(&self) -> EdgeSet {
        let mut rem = self.rank;
        let mut vertices = vec![0u32; self.k as usize];
        for i in (1..=self.k as u64).rev() {
            // largest a with C(a, i) <= rem
            let mut a = i - 1;
            while binomial(a + 1, i) <= rem {
                a += 1;
            }
            rem -= binomial(a, i);
            vertices[i as usize - 1] = a as u32 + 1;
        }
        debug_assert_eq!(rem, 0);
        EdgeSet::from_vertices(&vertices).expect("unrank produces increasing vertices")
    }
}

/// Colex comparison of two equal-size sets: the larger set is the one owning
/// the largest element of the symmetric difference.
pub fn colex_compare(a: &EdgeSet, b: &EdgeSet) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "colex_compare needs equal sizes, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.cmp(b))
}

/// All k-subsets of [n] in colex order.
pub fn k_subsets(n: u32, k: u32) -> Vec<EdgeSet> {
    (0..binomial(n as u64, k as u64))
        .map(|rank| ColexRank { k, rank }.unrank())
        .collect()
}

/// The m colex-smallest k-subsets. Universe is the largest vertex used,
/// or k when m <= 1.
pub fn shifted(k: u32, m: u64) -> Hypergraph {
    let edges: Vec<EdgeSet> = (0..m).map(|rank| ColexRank { k, rank }.unrank()).collect();
    let n = edges
        .iter()
        .filter_map(|e| e.max_vertex())
        .max()
        .unwrap_or(0)
        .max(k);
    Hypergraph::new(k, n, edges).expect("colex prefix is a valid family")
}

/// The complete k-uniform hypergraph on [n].
pub fn clique(k: u32, n: u32) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "clique requires 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    Hypergraph::new(k, n, k_subsets(n, k))
}

/// Disjoint blocks on fresh (k+1)-vertex sets: q blocks of d edges and one
/// block of r edges where m = qd + r, each block taking the first d (resp. r)
/// of the k+1 possible k-subsets in colex order.
pub fn low_degree_extremal(k: u32, d: u64, m: u64) -> Result<Hypergraph> {
    if d >= k as u64 {
        return Err(Error::LowDegreeRange { d, k });
    }
    if d == 0 || m == 0 {
        return Err(Error::InvalidArgument("low_degree_extremal requires d >= 1, m >= 1".into()));
    }
    let (q, r) = (m / d, m % d);
    let blocks = q + u64::from(r > 0);
    let mut edges = Vec::with_capacity(m as usize);
    for b in 0..blocks {
        let base = (b * (k as u64 + 1)) as u32;
        let size = if b < q { d } else { r };
        let block: Vec<u32> = (base + 1..=base + k + 1).collect();
        // the colex-smallest k-subsets of the block omit its largest vertices
        for j in 0..size {
            let omit = block[(k as u64 - j) as usize];
            let vertices: Vec<u32> = block.iter().copied().filter(|&v| v != omit).collect();
            edges.push(EdgeSet::from_vertices(&vertices)?);
        }
    }
    let n = (blocks * (k as u64 + 1)) as u32;
    Hypergraph::new(k, n, edges)
}

/// Backtracking perfect-matching extraction: cover the smallest uncovered
/// vertex with the colex-smallest admissible unused edge.
fn extract_matching(
    n: u32,
    candidates: &[EdgeSet],
    used: &[bool],
    covered: &mut EdgeSet,
    matching: &mut Vec<usize>,
    target: usize,
) -> bool {
    if matching.len() == target {
        return true;
    }
    let v = (1..=n).find(|&v| !covered.contains(v)).expect("uncovered vertex exists");
    for (i, e) in candidates.iter().enumerate() {
        if used[i] || !e.contains(v) || e.intersection_size(covered) != 0 {
            continue;
        }
        let saved = covered.clone();
        *covered = covered.union(e);
        matching.push(i);
        if extract_matching(n, candidates, used, covered, matching, target) {
            return true;
        }
        matching.pop();
        *covered = saved;
    }
    false
}

/// The clique C([n], k) with s pairwise edge-disjoint perfect matchings
/// deleted, packed greedily. Errors if k does not divide n, if the packing
/// fails, or if some (k-1)-set loses its last superset.
pub fn clique_minus_matchings(k: u32, n: u32, s: u32) -> Result<Hypergraph> {
    if k == 0 || k > n || !n.is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!(
            "clique_minus_matchings requires 1 <= k <= n and k | n, got k = {k}, n = {n}"
        )));
    }
    let per_matching = (n / k) as usize;
    if (s as u64) * (per_matching as u64) > binomial(n as u64 - 1, k as u64 - 1) {
        return Err(Error::MatchingPacking { k, n, s });
    }
    let candidates = k_subsets(n, k);
    let mut used = vec![false; candidates.len()];
    for _ in 0..s {
        let mut covered = EdgeSet::empty();
        let mut matching = Vec::new();
        if !extract_matching(n, &candidates, &used, &mut covered, &mut matching, per_matching) {
            return Err(Error::MatchingPacking { k, n, s });
        }
        for i in matching {
            used[i] = true;
        }
    }
    let edges: Vec<EdgeSet> = candidates
        .iter()
        .zip(&used)
        .filter(|(_, &u)| !u)
        .map(|(e, _)| e.clone())
        .collect();
    let h = Hypergraph::new(k, n, edges)?;
    // every (k-1)-set must keep a surviving superset
    if k >= 2 {
        for facet in k_subsets(n, k - 1) {
            if !h.edges().iter().any(|e| facet.is_subset_of(e)) {
                return Err(Error::ShadowBroken(format!("{facet:?}")));
            }
        }
    }
    Ok(h)
}

/// The shifted family of size C(t+1, k) + C(t+2-ceil((t+2)/k), k-1), built
/// from its closed-form union C([t+1], k) with the (k-1)-subsets of a prefix
/// extended by vertex t+2. Cross-checked against the colex generator.
pub fn prop16_family(k: u32, t: u32) -> Result<Hypergraph> {
    if k < 3 || t < k {
        return Err(Error::InvalidArgument(format!(
            "prop16_family requires t >= k >= 3, got k = {k}, t = {t}"
        )));
    }
    let ceil_term = (t + 2).div_ceil(k);
    let prefix = t + 2 - ceil_term;
    let mut edges = k_subsets(t + 1, k);
    for e in k_subsets(prefix, k - 1) {
        let mut extended = e.clone();
        extended.insert(t + 2);
        edges.push(extended);
    }
    let h = Hypergraph::new(k, t + 2, edges)?;
    let by_rank = shifted(k, h.len() as u64);
    assert_eq!(
        h.edges(),
        by_rank.edges(),
        "closed-form union disagrees with the colex prefix of the same size"
    );
    Ok(h)
}
