//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shadowlab::bounds::{best_bound, bound_low_degree};
use shadowlab::construct::{
    clique, clique_minus_matchings, k_subsets, low_degree_extremal, prop16_family, shifted,
};
use shadowlab::kknum::{
    binomial, k_binomial_representation, long_interval_threshold, shadow_function,
    short_interval_bound,
};
use shadowlab::search::{enumerate_min_ratio, enumerate_min_shadow, SearchSpec};
use shadowlab::{Hypergraph, Ratio};

fn report(criterion: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{verdict} {criterion}: {detail}");
    assert!(ok, "{criterion}: {detail}");
}

/// Smallest universe that can host m edges of a k-uniform family, but at
/// least `floor`.
fn hosting_n(k: u32, m: u64, floor: u32) -> u32 {
    let mut n = floor.max(k);
    while binomial(n as u64, k as u64) < m {
        n += 1;
    }
    n
}

#[test]
fn criterion_1_kk_oracle_equivalence() {
    let mut worst = String::new();
    let mut ok = true;
    for k in [2u32, 3u32] {
        for m in 1..=20u64 {
            let fk = shadow_function(m, k);
            // 20 pairs do not fit on 6 vertices; grow the universe minimally
            let n = hosting_n(k, m, 6);
            let found = enumerate_min_shadow(SearchSpec::new(k, n, m).with_size(m))
                .unwrap();
            let min_shadow = found.value.as_shadow_size().unwrap();
            let attained = shifted(k, m).shadow().unwrap().len() as u64;
            if min_shadow != fk || attained != fk || !found.exhaustive {
                ok = false;
                worst = format!("k={k} m={m}: search {min_shadow}, shifted {attained}, F={fk}");
                break;
            }
        }
    }
    report(
        "criterion 1 (KK oracle equivalence, k in {2,3}, m <= 20)",
        ok,
        if ok { "min shadow = F_k(m) = shifted shadow everywhere" } else { &worst },
    );
}

#[test]
fn criterion_2_low_degree_exactness() {
    let mut ok = true;
    let mut detail = String::new();
    let k = 3u32;
    for d in [1u64, 2u64] {
        for m in 1..=6u64 {
            // degree sum forces km <= nd; for (d, m) = (2, 6) no family fits
            // on 8 vertices, so the universe grows to the smallest feasible n
            let n = if d == 2 && m <= 5 {
                8
            } else {
                hosting_n(k, m, ((k as u64 * m).div_ceil(d) as u32).max(k + 1))
            };
            let expected = bound_low_degree(k, &Ratio::from(d), m).unwrap();
            let found = enumerate_min_shadow(SearchSpec::new(k, n, d).with_size(m)).unwrap();
            let min_shadow = found.value.as_shadow_size().unwrap();
            let built = low_degree_extremal(k, d, m).unwrap();
            let attained = built.shadow().unwrap().len() as u64;
            if min_shadow != expected || attained != expected || !found.exhaustive {
                ok = false;
                detail = format!(
                    "d={d} m={m} n={n}: search {min_shadow}, construction {attained}, formula {expected}"
                );
            }
        }
    }
    // the (d, m) = (2, 6) instance really is empty on 8 vertices
    let infeasible = enumerate_min_shadow(SearchSpec::new(3, 8, 2).with_size(6)).is_err();
    if !infeasible {
        ok = false;
        detail = "d=2 m=6 unexpectedly feasible on 8 vertices".into();
    }
    report(
        "criterion 2 (low-degree minimum shadow, k=3, d in {1,2}, m <= 6)",
        ok,
        if ok { "search = formula = construction; (d=2, m=6) infeasible on n=8, verified on n=9" } else { &detail },
    );
}

#[test]
fn criterion_3_long_interval_tightness() {
    let result = enumerate_min_ratio(SearchSpec::new(3, 6, 4)).unwrap();
    let ratio = result.value.as_ratio().unwrap().clone();
    let expected = Ratio::new(3, 2);
    let witness_is_k4 = result.witness.edges() == clique(3, 4).unwrap().edges();
    let ok = ratio == expected && witness_is_k4 && result.exhaustive;
    report(
        "criterion 3 (long-interval tightness, k=3, t=3, d=4)",
        ok,
        &format!(
            "min ratio {ratio}, witness has {} edges, equals clique(3,4): {witness_is_k4}",
            result.witness.len()
        ),
    );
}

/// Isomorphism test by exhausting vertex relabelings; both inputs must live
/// on the same small universe.
fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.k() != b.k() || a.len() != b.len() {
        return false;
    }
    let n = a.n().max(b.n());
    let verts: Vec<u32> = (1..=n).collect();
    let b_edges = b.edges().to_vec();
    permutations(&verts).into_iter().any(|perm| {
        let mut mapped: Vec<Vec<u32>> = a
            .edges()
            .iter()
            .map(|e| {
                let mut vs: Vec<u32> =
                    e.vertices().iter().map(|&v| perm[(v - 1) as usize]).collect();
                vs.sort_unstable();
                vs
            })
            .collect();
        mapped.sort_unstable();
        let mut target: Vec<Vec<u32>> = b_edges
            .iter()
            .map(|e| e.vertices())
            .collect();
        target.sort_unstable();
        mapped == target
    })
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

#[test]
fn criterion_4_short_interval_tightness() {
    let result = enumerate_min_ratio(SearchSpec::new(3, 6, 9)).unwrap();
    let ratio = result.value.as_ratio().unwrap().clone();
    let expected = Ratio::new(5, 6);
    let built = clique_minus_matchings(3, 6, 1).unwrap();
    let same = isomorphic(&result.witness, &built);
    let ok = ratio == expected && same && result.exhaustive;
    report(
        "criterion 4 (short-interval tightness, k=3, t=4, d=9)",
        ok,
        &format!(
            "min ratio {ratio}, witness isomorphic to clique(3,6) minus a perfect matching: {same}, nodes {}",
            result.nodes_explored
        ),
    );
}

#[test]
fn criterion_5_prop16_reproduction() {
    let h = prop16_family(3, 4).unwrap();
    let shadow = h.shadow().unwrap().len();
    let ratio = h.shadow_ratio().unwrap();
    let mut degrees: Vec<u64> = (1..=h.n()).map(|v| h.degree(v).unwrap()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let classes_ok = degrees == vec![6, 9];
    let ok = h.len() == 16
        && shadow == 14
        && h.max_degree() == 9
        && ratio == Ratio::new(7, 8)
        && ratio < Ratio::new(1, 1)
        && classes_ok;
    report(
        "criterion 5 (nonregular family at k=3, t=4)",
        ok,
        &format!(
            "16 edges, shadow {shadow}, max degree {}, ratio {ratio}, degree values {degrees:?}",
            h.max_degree()
        ),
    );
}

#[test]
fn criterion_6_interval_lemmas_exhaustive() {
    let mut checked = 0u64;
    for k in 2u32..=5 {
        for a in k as u64..=10 {
            let clique_bound = Ratio::new(k as u64, a - k as u64 + 1);
            let threshold = long_interval_threshold(a, k).unwrap();
            for m in 1..=threshold {
                let lhs = Ratio::new(shadow_function(m, k), m);
                assert!(
                    lhs >= clique_bound,
                    "long interval fails at k={k} a={a} m={m}: {lhs} < {clique_bound}"
                );
                checked += 1;
            }
            let upper = binomial(a + 1, k as u64);
            for d in 1..=upper {
                let Ok(bound) = short_interval_bound(d, a, k) else { continue };
                for m in 1..=d {
                    let lhs = Ratio::new(shadow_function(m, k), m);
                    assert!(
                        lhs >= bound,
                        "short interval fails at k={k} a={a} d={d} m={m}: {lhs} < {bound}"
                    );
                    checked += 1;
                }
            }
        }
    }
    report(
        "criterion 6 (interval lemmas, k <= 5, a <= 10)",
        true,
        &format!("{checked} exact rational comparisons hold"),
    );
}

fn random_hypergraph(rng: &mut ChaCha8Rng, k_min: u32) -> Hypergraph {
    loop {
        let k = rng.random_range(k_min..=5);
        let n = rng.random_range(k + 1..=10);
        let pool = k_subsets(n, k);
        let target = rng.random_range(1..=pool.len());
        let mut edges = Vec::new();
        for e in &pool {
            if rng.random_range(0..pool.len()) < target {
                edges.push(e.clone());
            }
        }
        if edges.is_empty() {
            continue;
        }
        return Hypergraph::new(k, n, edges).unwrap();
    }
}

#[test]
fn criterion_7_link_identities_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed31);
    for trial in 0..10_000u32 {
        let h = random_hypergraph(&mut rng, 3);
        let k = h.k() as u64;
        let shadow = h.shadow().unwrap();
        let degree_sum: u64 = (1..=h.n()).map(|v| h.degree(v).unwrap()).sum();
        assert_eq!(degree_sum, k * h.len() as u64, "degree double count, trial {trial}");
        let shadow_degree_sum: u64 =
            (1..=h.n()).map(|v| shadow.degree(v).unwrap()).sum();
        assert_eq!(
            shadow_degree_sum,
            (k - 1) * shadow.len() as u64,
            "shadow double count, trial {trial}"
        );
        let mut min_link_ratio: Option<Ratio> = None;
        for v in 1..=h.n() {
            let deg = h.degree(v).unwrap();
            if deg == 0 {
                continue;
            }
            let link = h.link(v).unwrap();
            let link_shadow = link.shadow().unwrap().len() as u64;
            assert_eq!(
                link_shadow,
                shadow.degree(v).unwrap(),
                "link-shadow bijection at v={v}, trial {trial}"
            );
            let r = Ratio::new(link_shadow, deg);
            if min_link_ratio.as_ref().is_none_or(|b| &r < b) {
                min_link_ratio = Some(r);
            }
        }
        let alpha = min_link_ratio.unwrap();
        let lifted = Ratio::new(k, k - 1) * alpha;
        let ratio = h.shadow_ratio().unwrap();
        assert!(ratio >= lifted, "link lifting fails, trial {trial}: {ratio} < {lifted}");
    }
    report(
        "criterion 7 (link identity sweep, 10^4 random hypergraphs)",
        true,
        "double counting, link-shadow bijection and min-link lifting all exact",
    );
}

#[test]
fn criterion_8_bound_soundness_fuzz() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed32);
    for trial in 0..10_000u32 {
        let h = random_hypergraph(&mut rng, 2);
        let ratio = h.shadow_ratio().unwrap();
        let d = Ratio::from(h.max_degree());
        let report = best_bound(h.k(), &d).unwrap();
        assert!(
            ratio >= report.best.value,
            "unsound bound, trial {trial}: k={} d={d} ratio {ratio} < {} via {}",
            h.k(),
            report.best.value,
            report.best.regime
        );
    }
    report(
        "criterion 8 (bound soundness fuzz, 10^4 random hypergraphs)",
        true,
        "shadow ratio >= best bound at the observed max degree, exactly",
    );
}

#[test]
fn criterion_9_representation_roundtrip() {
    for k in 1u32..=6 {
        let mut prev = 0u64;
        for m in 1..=100_000u64 {
            let repr = k_binomial_representation(m, k).unwrap();
            assert_eq!(repr.value(), m, "cascade does not reconstruct m={m} at k={k}");
            // shape: indices strictly descend from k, rows strictly descend,
            // and every row stays at or above its index
            let terms = repr.terms();
            assert_eq!(terms[0].1, k);
            for w in terms.windows(2) {
                assert_eq!(w[1].1, w[0].1 - 1);
                assert!(w[1].0 < w[0].0);
            }
            for &(a, i) in terms {
                assert!(i >= 1 && a >= i as u64);
            }
            let f = shadow_function(m, k);
            assert!(f >= prev, "F_{k} not monotone at m={m}");
            prev = f;
        }
    }
    report(
        "criterion 9 (cascade round-trip, m <= 10^5, k <= 6)",
        true,
        "reconstruction, shape and monotonicity hold",
    );
}
