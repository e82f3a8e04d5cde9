//! k-uniform hypergraphs with bitset edges and the primitive operations:
//! shadow, degrees, links, connected components.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// A set of vertices from [n], stored as a bit mask (vertex v at bit v-1).
///
/// The word vector grows with the largest vertex, so any universe size is
/// supported; intersection and subset tests are O(n/64). Trailing zero words
/// are trimmed so equal sets have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: SmallVec<[u64; 2]>,
}

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet { words: SmallVec::new() }
    }

    /// Builds an edge from strictly increasing 1-based vertex ids.
    pub fn from_vertices(vertices: &[u32]) -> Result<Self> {
        let mut e = EdgeSet::empty();
        let mut prev = 0u32;
        for &v in vertices {
            if v == 0 {
                return Err(Error::InvalidEdge("vertex ids are 1-based positive".into()));
            }
            if v <= prev {
                return Err(Error::InvalidEdge(format!(
                    "vertices must be strictly increasing, got {v} after {prev}"
                )));
            }
            e.insert(v);
            prev = v;
        }
        Ok(e)
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!(v >= 1);
        let (w, b) = (((v - 1) / 64) as usize, (v - 1) % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn contains(&self, v: u32) -> bool {
        if v == 0 {
            return false;
        }
        let (w, b) = (((v - 1) / 64) as usize, (v - 1) % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for (i, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros();
                out.push(i as u32 * 64 + b + 1);
                w &= w - 1;
            }
        }
        out
    }

    pub fn max_vertex(&self) -> Option<u32> {
        for (i, &word) in self.words.iter().enumerate().rev() {
            if word != 0 {
                return Some(i as u32 * 64 + 63 - word.leading_zeros() + 1);
            }
        }
        None
    }

    pub fn intersection_size(&self, other: &EdgeSet) -> u32 {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        if self.words.len() > other.words.len()
            && self.words[other.words.len()..].iter().any(|&w| w != 0)
        {
            return false;
        }
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// The set with vertex v removed (v need not be present).
    pub fn without(&self, v: u32) -> EdgeSet {
        let mut e = self.clone();
        if v >= 1 {
            let (w, b) = (((v - 1) / 64) as usize, (v - 1) % 64);
            if let Some(word) = e.words.get_mut(w) {
                *word &= !(1 << b);
            }
        }
        e.trim();
        e
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut words = self.words.clone();
        if words.len() < other.words.len() {
            words.resize(other.words.len(), 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            words[i] |= w;
        }
        EdgeSet { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

/// Colexicographic order: A > B iff the largest element of the symmetric
/// difference lies in A. On bit masks this is numeric comparison.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in (0..n).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A k-uniform hypergraph on universe [n]: a duplicate-free family of
/// k-element subsets. Edges are kept sorted in colex order.
///
/// Values are immutable after construction and safe to share across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    k: u32,
    n: u32,
    edges: Vec<EdgeSet>,
}

impl Hypergraph {
    /// Validates uniformity, range and duplicate-freeness; sorts edges colex.
    pub fn new(k: u32, n: u32, edges: Vec<EdgeSet>) -> Result<Self> {
        let mut edges = edges;
        for e in &edges {
            if e.len() != k {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} has {} vertices, expected k = {k}",
                    e.len()
                )));
            }
            if let Some(max) = e.max_vertex() {
                if max > n {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {e:?} uses vertex {max} > n = {n}"
                    )));
                }
            }
        }
        edges.sort();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::InvalidHypergraph("duplicate edges".into()));
        }
        Ok(Hypergraph { k, n, edges })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_edge_lists(k: u32, n: u32, lists: &[Vec<u32>]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| EdgeSet::from_vertices(l))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(k, n, edges)
    }

    pub fn empty(k: u32, n: u32) -> Self {
        Hypergraph { k, n, edges: Vec::new() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in colex order.
    pub fn edges(&self) -> &[EdgeSet] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &EdgeSet) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// The (k-1)-uniform shadow: every (k-1)-subset of every edge, once.
    pub fn shadow(&self) -> Result<Hypergraph> {
        if self.k == 0 {
            return Err(Error::UniformityTooSmall { op: "shadow", k: 0, min: 1 });
        }
        let mut facets = BTreeSet::new();
        for e in &self.edges {
            for v in e.vertices() {
                facets.insert(e.without(v));
            }
        }
        Ok(Hypergraph {
            k: self.k - 1,
            n: self.n,
            edges: facets.into_iter().collect(),
        })
    }

    /// |shadow| / |edges| as an exact rational.
    pub fn shadow_ratio(&self) -> Result<Ratio> {
        if self.edges.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let s = self.shadow()?.len() as u64;
        Ok(Ratio::new(s, self.edges.len() as u64))
    }

    /// Number of edges containing v.
    pub fn degree(&self, v: u32) -> Result<u64> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count() as u64)
    }

    /// Maximum degree over [n]; 0 for the empty family.
    pub fn max_degree(&self) -> u64 {
        let mut counts = vec![0u64; self.n as usize + 1];
        for e in &self.edges {
            for v in e.vertices() {
                counts[v as usize] += 1;
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }

    /// The (k-1)-uniform link: edges through v with v removed.
    pub fn link(&self, v: u32) -> Result<Hypergraph> {
        if self.k < 2 {
            return Err(Error::UniformityTooSmall { op: "link", k: self.k, min: 2 });
        }
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.without(v))
            .collect();
        Hypergraph::new(self.k - 1, self.n, edges)
    }

    /// Connected components under the relation "two edges share k-1 vertices",
    /// closed transitively. Union-find over an O(m^2) pairwise scan.
    pub fn components(&self) -> Vec<Hypergraph> {
        let m = self.edges.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..m {
            for j in i + 1..m {
                if self.edges[i].intersection_size(&self.edges[j]) + 1 == self.k {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<(usize, Vec<EdgeSet>)> = Vec::new();
        for i in 0..m {
            let root = find(&mut parent, i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, g)) => g.push(self.edges[i].clone()),
                None => groups.push((root, vec![self.edges[i].clone()])),
            }
        }
        groups
            .into_iter()
            .map(|(_, edges)| Hypergraph { k: self.k, n: self.n, edges })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn hg(k: u32, n: u32, lists: &[&[u32]]) -> Hypergraph {
        Hypergraph::from_edge_lists(k, n, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn edge_set_basics() {
        let e = EdgeSet::from_vertices(&[1, 3, 70]).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.vertices(), vec![1, 3, 70]);
        assert_eq!(e.max_vertex(), Some(70));
        assert!(e.contains(70));
        assert!(!e.contains(2));
        assert!(EdgeSet::from_vertices(&[2, 2]).is_err());
        assert!(EdgeSet::from_vertices(&[0]).is_err());
    }

    #[test]
    fn colex_order() {
        let a = EdgeSet::from_vertices(&[1, 2, 3]).unwrap();
        let b = EdgeSet::from_vertices(&[1, 2, 4]).unwrap();
        let c = EdgeSet::from_vertices(&[2, 3, 4]).unwrap();
        let d = EdgeSet::from_vertices(&[1, 2, 5]).unwrap();
        assert!(a < b);
        assert!(b < c);
        assert!(c < d);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    #[test]
    fn rejects_bad_hypergraphs() {
        assert!(Hypergraph::from_edge_lists(3, 5, &[vec![1, 2]]).is_err());
        assert!(Hypergraph::from_edge_lists(2, 3, &[vec![1, 4]]).is_err());
        assert!(Hypergraph::from_edge_lists(2, 3, &[vec![1, 2], vec![1, 2]]).is_err());
    }

    #[test]
    fn shadow_single_edge() {
        let h = hg(3, 3, &[&[1, 2, 3]]);
        let s = h.shadow().unwrap();
        assert_eq!(s.k(), 2);
        assert_eq!(s.len(), 3);
        assert_eq!(h.shadow_ratio().unwrap(), Ratio::new(3, 1));
    }

    #[test]
    fn shadow_of_clique_is_lower_level() {
        let h = construct::clique(3, 5).unwrap();
        let s = h.shadow().unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s, construct::clique(2, 5).unwrap());
        assert_eq!(h.shadow_ratio().unwrap(), Ratio::one());
    }

    #[test]
    fn shadow_of_shifted_17() {
        let h = construct::shifted(3, 17);
        assert_eq!(h.shadow().unwrap().len(), 15);
    }

    #[test]
    fn shadow_errors() {
        let h = Hypergraph::empty(0, 3);
        assert!(h.shadow().is_err());
        assert!(matches!(Hypergraph::empty(3, 5).shadow_ratio(), Err(Error::EmptyFamily)));
        // empty family shadow is the empty (k-1)-uniform family
        let s = Hypergraph::empty(3, 5).shadow().unwrap();
        assert_eq!((s.k(), s.len()), (2, 0));
    }

    #[test]
    fn degrees() {
        let h = construct::clique(3, 5).unwrap();
        assert_eq!(h.degree(1).unwrap(), 6);
        let single = hg(3, 5, &[&[1, 2, 3]]);
        assert_eq!(single.degree(4).unwrap(), 0);
        assert!(single.degree(6).is_err());
        assert!(single.degree(0).is_err());
    }

    #[test]
    fn prop16_degree_classes() {
        let h = construct::prop16_family(3, 4).unwrap();
        assert_eq!(h.degree(6).unwrap(), 6);
        assert_eq!(h.degree(5).unwrap(), 6);
        assert_eq!(h.degree(1).unwrap(), 9);
    }

    #[test]
    fn max_degree_cases() {
        assert_eq!(construct::clique(3, 6).unwrap().max_degree(), 10);
        assert_eq!(Hypergraph::empty(3, 5).max_degree(), 0);
        let h = construct::clique_minus_matchings(3, 6, 1).unwrap();
        assert_eq!(h.max_degree(), 9);
    }

    #[test]
    fn links() {
        let h = construct::clique(3, 5).unwrap();
        let l = h.link(5).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l.len() as u64, h.degree(5).unwrap());
        for e in l.edges() {
            assert!(e.max_vertex().unwrap() <= 4);
        }

        let h = hg(3, 5, &[&[1, 2, 3], &[1, 4, 5]]);
        let l = h.link(1).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.contains_edge(&EdgeSet::from_vertices(&[2, 3]).unwrap()));
        assert!(l.contains_edge(&EdgeSet::from_vertices(&[4, 5]).unwrap()));

        // link at the top vertex of the prop 1.6 family is the 2-clique on [4]
        let p = construct::prop16_family(3, 4).unwrap();
        let link = p.link(6).unwrap();
        assert_eq!(link.edges(), construct::clique(2, 4).unwrap().edges());

        assert!(hg(1, 3, &[&[1]]).link(1).is_err());
    }

    #[test]
    fn components_split() {
        let h = hg(3, 6, &[&[1, 2, 3], &[1, 2, 4], &[4, 5, 6]]);
        let mut comps = h.components();
        comps.sort_by_key(|c| c.len());
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 1);
        assert_eq!(comps[1].len(), 2);

        assert_eq!(construct::clique(3, 5).unwrap().components().len(), 1);
    }

    #[test]
    fn low_degree_extremal_component_count() {
        // q+1 blocks on disjoint (k+1)-sets stay separate components
        let h = construct::low_degree_extremal(3, 2, 5).unwrap();
        assert_eq!(h.components().len(), 3);
    }
}
