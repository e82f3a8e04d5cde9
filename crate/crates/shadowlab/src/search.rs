//! Brute-force oracle: exhaustive enumeration of k-uniform hypergraphs under
//! degree and universe constraints, minimizing shadow ratio or shadow size
//! for a fixed size, with certificate counters.
//!
//! Enumeration is a DFS over the colex-ordered candidate edges, each node
//! deciding include/exclude of the next candidate. Shifted families appear
//! early, giving strong incumbents for pruning. All pruning rules are
//! provably safe: degree caps, size feasibility, the monotone shadow lower
//! bound, and symmetry reductions that keep one representative per
//! isomorphism class reachable.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;

use serde::Serialize;

use crate::bounds::{best_bound, BoundEntry, Regime};
use crate::construct::{k_subsets, ColexRank};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::kknum::binomial;
use crate::ratio::Ratio;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Objective {
    /// Minimize |shadow|/|family| over nonempty families.
    MinRatio,
    /// Minimize |shadow| over families of the exact requested size.
    MinShadowForSize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    /// Raw subset enumeration, no isomorph reduction.
    None,
    /// Force the colex-smallest included edge to {1..k} and require new
    /// vertices to be introduced as consecutive integers. Every isomorphism
    /// class keeps a reachable representative, so minima are preserved.
    FirstEdgeCanonical,
    /// FirstEdgeCanonical plus minimal-image deduplication of evaluated
    /// families. Only for n_max <= 7.
    FullCanonical,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub k: u32,
    pub n_max: u32,
    /// Degree cap; use d >= m as an "unbounded" sentinel.
    pub d: u64,
    /// Exact family size, required for MinShadowForSize.
    pub m: Option<u64>,
    pub objective: Objective,
    pub symmetry: Symmetry,
    pub threads: usize,
    /// Node budget; exceeding it yields a partial, non-exhaustive result.
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(k: u32, n_max: u32, d: u64) -> Self {
        SearchSpec {
            k,
            n_max,
            d,
            m: None,
            objective: Objective::MinRatio,
            symmetry: Symmetry::FirstEdgeCanonical,
            threads: 1,
            budget: 1 << 30,
        }
    }

    pub fn with_size(mut self, m: u64) -> Self {
        self.m = Some(m);
        self.objective = Objective::MinShadowForSize;
        self
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 || self.n_max < self.k || self.d == 0 {
            return Err(Error::InvalidArgument(format!(
                "search requires n_max >= k >= 1 and d >= 1, got k = {}, n_max = {}, d = {}",
                self.k, self.n_max, self.d
            )));
        }
        if let Some(m) = self.m {
            if m > binomial(self.n_max as u64, self.k as u64) {
                return Err(Error::InvalidArgument(format!(
                    "size {m} exceeds C({}, {})",
                    self.n_max, self.k
                )));
            }
        }
        if self.objective == Objective::MinShadowForSize && self.m.is_none() {
            return Err(Error::InvalidArgument(
                "MinShadowForSize requires an exact size".into(),
            ));
        }
        if self.objective == Objective::MinShadowForSize && self.m == Some(0) {
            return Err(Error::InvalidArgument("size must be >= 1".into()));
        }
        if self.symmetry == Symmetry::FullCanonical && self.n_max > 7 {
            return Err(Error::InvalidArgument(
                "full canonical reduction is limited to n_max <= 7".into(),
            ));
        }
        Ok(())
    }
}

/// Objective value of a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ObjectiveValue {
    Ratio(Ratio),
    ShadowSize(u64),
}

impl ObjectiveValue {
    fn cmp_same(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (ObjectiveValue::Ratio(a), ObjectiveValue::Ratio(b)) => a.cmp(b),
            (ObjectiveValue::ShadowSize(a), ObjectiveValue::ShadowSize(b)) => a.cmp(b),
            _ => unreachable!("objective kinds never mix within one search"),
        }
    }

    pub fn as_ratio(&self) -> Option<&Ratio> {
        match self {
            ObjectiveValue::Ratio(r) => Some(r),
            ObjectiveValue::ShadowSize(_) => None,
        }
    }

    pub fn as_shadow_size(&self) -> Option<u64> {
        match self {
            ObjectiveValue::ShadowSize(s) => Some(*s),
            ObjectiveValue::Ratio(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub witness: Hypergraph,
    pub value: ObjectiveValue,
    pub nodes_explored: u64,
    pub pruned: u64,
    pub exhaustive: bool,
}

struct Candidate {
    edge: EdgeSet,
    vertices: Vec<u32>,
    facet_ranks: Vec<usize>,
    max_vertex: u32,
}

struct Ctx {
    spec: SearchSpec,
    candidates: Vec<Candidate>,
    /// image_ranks[p][c]: colex rank of candidate c under permutation p.
    image_ranks: Vec<Vec<u64>>,
    incumbent: Mutex<Option<ObjectiveValue>>,
    nodes: AtomicU64,
    pruned: AtomicU64,
    exhausted_budget: AtomicBool,
}

impl Ctx {
    fn new(spec: SearchSpec) -> Self {
        let k = spec.k;
        let candidates = k_subsets(spec.n_max, k)
            .into_iter()
            .map(|edge| {
                let vertices = edge.vertices();
                let facet_ranks = vertices
                    .iter()
                    .map(|&v| ColexRank::of(&edge.without(v)).rank as usize)
                    .collect();
                let max_vertex = edge.max_vertex().unwrap_or(0);
                Candidate { edge, vertices, facet_ranks, max_vertex }
            })
            .collect::<Vec<_>>();
        let image_ranks = if spec.symmetry == Symmetry::FullCanonical {
            permutations(spec.n_max)
                .into_iter()
                .map(|perm| {
                    candidates
                        .iter()
                        .map(|c| {
                            let mut vs: Vec<u32> =
                                c.vertices.iter().map(|&v| perm[v as usize - 1]).collect();
                            vs.sort_unstable();
                            ColexRank::of(&EdgeSet::from_vertices(&vs).unwrap()).rank
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Ctx {
            spec,
            candidates,
            image_ranks,
            incumbent: Mutex::new(None),
            nodes: AtomicU64::new(0),
            pruned: AtomicU64::new(0),
            exhausted_budget: AtomicBool::new(false),
        }
    }

    fn facet_count(&self) -> usize {
        binomial(self.spec.n_max as u64, self.spec.k as u64 - 1) as usize
    }
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    heap_permute(&mut items, n as usize, &mut out);
    out
}

fn heap_permute(items: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
    if len <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..len {
        heap_permute(items, len - 1, out);
        if len.is_multiple_of(2) {
            items.swap(i, len - 1);
        } else {
            items.swap(0, len - 1);
        }
    }
}

struct Worker<'a> {
    ctx: &'a Ctx,
    chosen: Vec<usize>,
    degrees: Vec<u64>,
    facet_cover: Vec<u32>,
    shadow_count: u64,
    /// Largest introduced vertex; support is {1..support_max} in canonical modes.
    support_max: u32,
    best: Option<(ObjectiveValue, Vec<usize>)>,
    node_limit: u64,
    nodes: u64,
    pruned: u64,
    eval_counter: u64,
    seen_classes: HashSet<Vec<u64>>,
}

impl<'a> Worker<'a> {
    fn new(ctx: &'a Ctx, node_limit: u64) -> Self {
        Worker {
            ctx,
            chosen: Vec::new(),
            degrees: vec![0; ctx.spec.n_max as usize + 1],
            facet_cover: vec![0; ctx.facet_count()],
            shadow_count: 0,
            support_max: 0,
            best: None,
            node_limit,
            nodes: 0,
            pruned: 0,
            eval_counter: 0,
            seen_classes: HashSet::new(),
        }
    }

    fn include(&mut self, idx: usize) {
        let c = &self.ctx.candidates[idx];
        for &v in &c.vertices {
            self.degrees[v as usize] += 1;
        }
        for &f in &c.facet_ranks {
            self.facet_cover[f] += 1;
            if self.facet_cover[f] == 1 {
                self.shadow_count += 1;
            }
        }
        self.support_max = self.support_max.max(c.max_vertex);
        self.chosen.push(idx);
    }

    fn exclude(&mut self, idx: usize, saved_support: u32) {
        let c = &self.ctx.candidates[idx];
        for &v in &c.vertices {
            self.degrees[v as usize] -= 1;
        }
        for &f in &c.facet_ranks {
            self.facet_cover[f] -= 1;
            if self.facet_cover[f] == 0 {
                self.shadow_count -= 1;
            }
        }
        self.support_max = saved_support;
        self.chosen.pop();
    }

    fn degree_feasible(&self, idx: usize) -> bool {
        self.ctx.candidates[idx]
            .vertices
            .iter()
            .all(|&v| self.degrees[v as usize] < self.ctx.spec.d)
    }

    /// New vertices of a candidate must be the next consecutive integers.
    fn introduction_admissible(&self, idx: usize) -> bool {
        let c = &self.ctx.candidates[idx];
        if c.max_vertex <= self.support_max {
            return true;
        }
        let new = c
            .vertices
            .iter()
            .filter(|&&v| v > self.support_max)
            .count() as u32;
        c.max_vertex == self.support_max + new
    }

    fn canonical_key(&self) -> Vec<u64> {
        self.ctx
            .image_ranks
            .iter()
            .map(|ranks| {
                let mut image: Vec<u64> = self.chosen.iter().map(|&i| ranks[i]).collect();
                image.sort_unstable();
                image
            })
            .min()
            .expect("at least the identity permutation")
    }

    fn evaluate(&mut self) {
        if self.ctx.spec.symmetry == Symmetry::FullCanonical {
            let key = self.canonical_key();
            if !self.seen_classes.insert(key) {
                return;
            }
        }
        self.eval_counter += 1;
        // spot-check: incremental shadow counter vs a from-scratch computation
        if self.eval_counter % 1024 == 1 {
            let h = self.current_hypergraph();
            assert_eq!(
                h.shadow().expect("k >= 1").len() as u64,
                self.shadow_count,
                "incremental shadow counter diverged"
            );
        }
        let value = match self.ctx.spec.objective {
            Objective::MinRatio => {
                ObjectiveValue::Ratio(Ratio::new(self.shadow_count, self.chosen.len() as u64))
            }
            Objective::MinShadowForSize => ObjectiveValue::ShadowSize(self.shadow_count),
        };
        let better = match &self.best {
            None => true,
            Some((best_value, best_chosen)) => {
                witness_cmp(&value, &self.chosen, best_value, best_chosen)
                    == std::cmp::Ordering::Less
            }
        };
        if better {
            self.best = Some((value.clone(), self.chosen.clone()));
            let mut inc = self.ctx.incumbent.lock().unwrap();
            let improves = match &*inc {
                None => true,
                Some(cur) => value.cmp_same(cur) == std::cmp::Ordering::Less,
            };
            if improves {
                *inc = Some(value);
            }
        }
    }

    fn current_hypergraph(&self) -> Hypergraph {
        let edges: Vec<EdgeSet> = self
            .chosen
            .iter()
            .map(|&i| self.ctx.candidates[i].edge.clone())
            .collect();
        Hypergraph::new(self.ctx.spec.k, self.ctx.spec.n_max, edges)
            .expect("search states are valid hypergraphs")
    }

    /// The monotone lower bound for the subtree: shadow never shrinks and
    /// size cannot exceed s + remaining. Pruning is strict so every
    /// subtree keeps its tie-breaking candidates.
    fn subtree_hopeless(&self, remaining: usize) -> bool {
        let inc = self.ctx.incumbent.lock().unwrap();
        let Some(incumbent) = &*inc else {
            return false;
        };
        match (&self.ctx.spec.objective, incumbent) {
            (Objective::MinShadowForSize, ObjectiveValue::ShadowSize(best)) => {
                self.shadow_count > *best
            }
            (Objective::MinRatio, ObjectiveValue::Ratio(best)) => {
                let max_size = self.chosen.len() + remaining;
                if max_size == 0 {
                    return false;
                }
                &Ratio::new(self.shadow_count, max_size as u64) > best
            }
            _ => unreachable!(),
        }
    }

    fn dfs(&mut self, i: usize) {
        if self.nodes >= self.node_limit {
            self.ctx.exhausted_budget.store(true, AtomicOrdering::Relaxed);
            return;
        }
        self.nodes += 1;
        let total = self.ctx.candidates.len();
        if i == total {
            return;
        }
        let remaining = total - i;
        if let Some(m) = self.ctx.spec.m {
            if (self.chosen.len() + remaining) < m as usize {
                self.pruned += 1;
                return;
            }
            if self.chosen.len() == m as usize {
                return;
            }
        }
        if self.subtree_hopeless(remaining) {
            self.pruned += 1;
            return;
        }

        let canonical = self.ctx.spec.symmetry != Symmetry::None;
        let include_ok = self.degree_feasible(i)
            && (!canonical || self.introduction_admissible(i))
            && !(canonical && self.chosen.is_empty() && i != 0);
        if include_ok {
            let saved_support = self.support_max;
            self.include(i);
            let at_size_limit = self.ctx.spec.m == Some(self.chosen.len() as u64);
            if self.ctx.spec.m.is_none() || at_size_limit {
                self.evaluate();
            }
            if !at_size_limit {
                self.dfs(i + 1);
            }
            self.exclude(i, saved_support);
        }
        self.dfs(i + 1);
    }
}

/// Total order on witnesses: objective value, then fewer edges, then the
/// colex-lex order of the edge rank lists.
fn witness_cmp(
    value_a: &ObjectiveValue,
    chosen_a: &[usize],
    value_b: &ObjectiveValue,
    chosen_b: &[usize],
) -> std::cmp::Ordering {
    value_a
        .cmp_same(value_b)
        .then(chosen_a.len().cmp(&chosen_b.len()))
        .then_with(|| chosen_a.cmp(chosen_b))
}

/// Decisions fixed ahead of a parallel subtree: included indices plus the
/// next undecided candidate.
struct Job {
    chosen: Vec<usize>,
    next_index: usize,
}

fn collect_jobs(worker: &mut Worker<'_>, i: usize, depth: u32, jobs: &mut Vec<Job>) {
    if depth == 0 || i >= worker.ctx.candidates.len() {
        jobs.push(Job { chosen: worker.chosen.clone(), next_index: i });
        return;
    }
    if worker.nodes >= worker.node_limit {
        worker.ctx.exhausted_budget.store(true, AtomicOrdering::Relaxed);
        return;
    }
    worker.nodes += 1;
    if let Some(m) = worker.ctx.spec.m {
        let remaining = worker.ctx.candidates.len() - i;
        if (worker.chosen.len() + remaining) < m as usize {
            worker.pruned += 1;
            return;
        }
        if worker.chosen.len() == m as usize {
            return;
        }
    }
    let canonical = worker.ctx.spec.symmetry != Symmetry::None;
    let include_ok = worker.degree_feasible(i)
        && (!canonical || worker.introduction_admissible(i))
        && !(canonical && worker.chosen.is_empty() && i != 0);
    if include_ok {
        let saved_support = worker.support_max;
        worker.include(i);
        let at_size_limit = worker.ctx.spec.m == Some(worker.chosen.len() as u64);
        if worker.ctx.spec.m.is_none() || at_size_limit {
            worker.evaluate();
        }
        if !at_size_limit {
            collect_jobs(worker, i + 1, depth - 1, jobs);
        }
        worker.exclude(i, saved_support);
    }
    collect_jobs(worker, i + 1, depth - 1, jobs);
}

fn run_search(spec: SearchSpec) -> Result<SearchResult> {
    spec.validate()?;
    let threads = spec.threads;
    let budget = spec.budget;
    let ctx = Ctx::new(spec);

    let mut root = Worker::new(&ctx, budget);
    let mut best: Option<(ObjectiveValue, Vec<usize>)>;
    if threads <= 1 {
        root.dfs(0);
        ctx.nodes.fetch_add(root.nodes, AtomicOrdering::Relaxed);
        ctx.pruned.fetch_add(root.pruned, AtomicOrdering::Relaxed);
        best = root.best.take();
    } else {
        // the first two free decisions partition the forest into independent
        // subtrees; the shared incumbent only speeds pruning up, the final
        // answer is the deterministic minimum over subtree results
        let mut jobs = Vec::new();
        collect_jobs(&mut root, 0, 2, &mut jobs);
        let root_nodes = root.nodes;
        ctx.nodes.fetch_add(root.nodes, AtomicOrdering::Relaxed);
        ctx.pruned.fetch_add(root.pruned, AtomicOrdering::Relaxed);
        best = root.best.take();
        let per_job_budget = if jobs.is_empty() {
            0
        } else {
            budget.saturating_sub(root_nodes) / jobs.len() as u64
        };
        let queue = Mutex::new(jobs);
        let results: Mutex<Vec<(ObjectiveValue, Vec<usize>)>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| {
                    loop {
                        let job = { queue.lock().unwrap().pop() };
                        let Some(job) = job else { break };
                        let mut worker = Worker::new(&ctx, per_job_budget);
                        for &idx in &job.chosen {
                            worker.include(idx);
                        }
                        worker.dfs(job.next_index);
                        ctx.nodes.fetch_add(worker.nodes, AtomicOrdering::Relaxed);
                        ctx.pruned.fetch_add(worker.pruned, AtomicOrdering::Relaxed);
                        if let Some(found) = worker.best {
                            results.lock().unwrap().push(found);
                        }
                    }
                });
            }
        });
        for (value, chosen) in results.into_inner().unwrap() {
            let replace = match &best {
                None => true,
                Some((bv, bc)) => {
                    witness_cmp(&value, &chosen, bv, bc) == std::cmp::Ordering::Less
                }
            };
            if replace {
                best = Some((value, chosen));
            }
        }
    }

    let nodes_explored = ctx.nodes.load(AtomicOrdering::Relaxed);
    let pruned = ctx.pruned.load(AtomicOrdering::Relaxed);
    let exhaustive = !ctx.exhausted_budget.load(AtomicOrdering::Relaxed);
    let Some((value, chosen)) = best else {
        if !exhaustive {
            return Err(Error::BudgetExceeded { budget });
        }
        return Err(Error::InvalidArgument(
            "no hypergraph satisfies the search constraints".into(),
        ));
    };
    let edges: Vec<EdgeSet> = chosen.iter().map(|&i| ctx.candidates[i].edge.clone()).collect();
    let witness = Hypergraph::new(ctx.spec.k, ctx.spec.n_max, edges)?;
    // the reported value must be recomputable from the witness
    let recomputed = match ctx.spec.objective {
        Objective::MinRatio => ObjectiveValue::Ratio(witness.shadow_ratio()?),
        Objective::MinShadowForSize => {
            ObjectiveValue::ShadowSize(witness.shadow()?.len() as u64)
        }
    };
    assert_eq!(recomputed, value, "witness objective mismatch");
    Ok(SearchResult { witness, value, nodes_explored, pruned, exhaustive })
}

/// Minimum shadow ratio over nonempty families on <= n_max vertices with
/// maximum degree <= d.
pub fn enumerate_min_ratio(spec: SearchSpec) -> Result<SearchResult> {
    let mut spec = spec;
    spec.objective = Objective::MinRatio;
    run_search(spec)
}

/// Minimum shadow size over families of the exact size spec.m.
pub fn enumerate_min_shadow(spec: SearchSpec) -> Result<SearchResult> {
    let mut spec = spec;
    spec.objective = Objective::MinShadowForSize;
    run_search(spec)
}

/// Outcome of checking an enumerated minimum against the claimed bound.
#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub k: u32,
    pub d: u64,
    pub t: Option<u32>,
    pub n_max: u32,
    pub claimed: Ratio,
    pub claimed_regime: Regime,
    pub min_ratio: Ratio,
    pub attained: bool,
    /// False would indicate an implementation bug: the bounds are theorems.
    pub sound: bool,
    #[serde(skip)]
    pub witness: Hypergraph,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

/// Exhaustively minimizes the shadow ratio under (k, d, n_max) and compares
/// the minimum against the best applicable bound (or the regime for a given
/// t), reporting whether the bound is attained and by which witness.
pub fn certify_bound(k: u32, d: u64, t: Option<u32>, n_max: u32) -> Result<CertifyReport> {
    let report = best_bound(k, &Ratio::from(d))?;
    let entry: &BoundEntry = match t {
        None => &report.best,
        Some(t) => report
            .bounds
            .iter()
            .filter(|b| {
                matches!(b.regime,
                    Regime::LongInterval { t: bt } | Regime::ShortInterval { t: bt } if bt == t)
            })
            .max_by(|a, b| a.value.cmp(&b.value))
            .ok_or_else(|| {
                Error::InvalidArgument(format!("no interval regime applies at t = {t}, d = {d}"))
            })?,
    };
    let result = enumerate_min_ratio(SearchSpec::new(k, n_max, d))?;
    let min_ratio = result.value.as_ratio().expect("ratio objective").clone();
    Ok(CertifyReport {
        k,
        d,
        t,
        n_max,
        claimed: entry.value.clone(),
        claimed_regime: entry.regime,
        attained: min_ratio == entry.value,
        sound: min_ratio >= entry.value,
        min_ratio,
        witness: result.witness,
        nodes_explored: result.nodes_explored,
        exhaustive: result.exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::kknum::shadow_function;

    #[test]
    fn min_ratio_small_cliques() {
        let r = enumerate_min_ratio(SearchSpec::new(3, 6, 4)).unwrap();
        assert_eq!(r.value.as_ratio().unwrap(), &Ratio::new(3, 2));
        assert_eq!(r.witness.len(), 4);
        assert!(r.exhaustive);

        let r = enumerate_min_ratio(SearchSpec::new(2, 4, 2)).unwrap();
        assert_eq!(r.value.as_ratio().unwrap(), &Ratio::one());

        let r = enumerate_min_ratio(SearchSpec::new(3, 4, 2)).unwrap();
        assert_eq!(r.value.as_ratio().unwrap(), &Ratio::new(5, 2));
    }

    #[test]
    fn min_shadow_matches_shadow_function() {
        for m in 1..=12u64 {
            let r = enumerate_min_shadow(SearchSpec::new(3, 6, m).with_size(m)).unwrap();
            assert_eq!(r.value.as_shadow_size().unwrap(), shadow_function(m, 3), "m = {m}");
            assert!(r.exhaustive);
        }
    }

    #[test]
    fn min_shadow_low_degree() {
        let r = enumerate_min_shadow(SearchSpec::new(3, 8, 2).with_size(5)).unwrap();
        assert_eq!(r.value.as_shadow_size().unwrap(), 13);

        let r = enumerate_min_shadow(SearchSpec::new(2, 3, 2).with_size(3)).unwrap();
        assert_eq!(r.value.as_shadow_size().unwrap(), 3);
    }

    #[test]
    fn symmetry_modes_agree() {
        for symmetry in [Symmetry::None, Symmetry::FirstEdgeCanonical, Symmetry::FullCanonical] {
            let r = enumerate_min_ratio(
                SearchSpec::new(3, 5, 4).with_symmetry(symmetry),
            )
            .unwrap();
            assert_eq!(r.value.as_ratio().unwrap(), &Ratio::new(3, 2), "{symmetry:?}");
        }
    }

    #[test]
    fn thread_counts_agree() {
        let single = enumerate_min_ratio(SearchSpec::new(3, 6, 9)).unwrap();
        let multi = enumerate_min_ratio(SearchSpec::new(3, 6, 9).with_threads(4)).unwrap();
        assert_eq!(single.value, multi.value);
        assert_eq!(single.witness, multi.witness);
    }

    #[test]
    fn monotone_in_constraints() {
        let tight = enumerate_min_ratio(SearchSpec::new(3, 5, 3)).unwrap();
        let relaxed_d = enumerate_min_ratio(SearchSpec::new(3, 5, 6)).unwrap();
        let relaxed_n = enumerate_min_ratio(SearchSpec::new(3, 6, 3)).unwrap();
        assert!(relaxed_d.value.as_ratio().unwrap() <= tight.value.as_ratio().unwrap());
        assert!(relaxed_n.value.as_ratio().unwrap() <= tight.value.as_ratio().unwrap());
    }

    #[test]
    fn budget_exceeded_is_flagged() {
        // a tiny budget still finds some incumbent: partial result
        let partial = enumerate_min_ratio(SearchSpec::new(3, 6, 9).with_budget(3)).unwrap();
        assert!(!partial.exhaustive);
        // a zero budget finds nothing at all
        let err = enumerate_min_ratio(SearchSpec::new(3, 6, 9).with_budget(0));
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn infeasible_size_reports_error() {
        // sum of degrees km = 18 exceeds n*d = 16
        let err = enumerate_min_shadow(SearchSpec::new(3, 8, 2).with_size(6));
        assert!(err.is_err());
    }

    #[test]
    fn certify_short_interval() {
        let r = certify_bound(3, 9, Some(4), 6).unwrap();
        assert_eq!(r.claimed, Ratio::new(5, 6));
        assert_eq!(r.min_ratio, Ratio::new(5, 6));
        assert!(r.attained && r.sound);
        // witness is the clique minus one perfect matching
        assert_eq!(r.witness.len(), 18);
        assert_eq!(r.witness.max_degree(), 9);
    }

    #[test]
    fn certify_long_interval() {
        let r = certify_bound(3, 4, Some(3), 6).unwrap();
        assert_eq!(r.claimed, Ratio::new(3, 2));
        assert_eq!(r.min_ratio, Ratio::new(3, 2));
        assert!(r.attained && r.sound);
        assert_eq!(r.witness.edges(), construct::clique(3, 4).unwrap().edges());
    }

    #[test]
    fn certify_low_degree() {
        let r = certify_bound(3, 2, None, 8).unwrap();
        assert_eq!(r.claimed, Ratio::new(5, 2));
        assert_eq!(r.min_ratio, Ratio::new(5, 2));
        assert!(r.attained && r.sound);
    }
}
