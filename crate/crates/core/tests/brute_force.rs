//! Full-enumeration oracles, independent of the library's search paths.

use turan_core::combin::{binomial, subsets, subsets_of};
use turan_core::constructions::catalog;
use turan_core::hypergraph::{Hypergraph, VertexSet};
use turan_core::invariants::{clique_number, independence_number};
use turan_core::search::{max_edges_avoiding, min_edges_with_property};

fn random_like_graphs() -> Vec<Hypergraph> {
    // deterministic pseudo-random edge selections via an LCG, n in 4..=8
    let mut out = Vec::new();
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state
    };
    for n in 4..=8u32 {
        for r in 2..=3u32 {
            for _ in 0..6 {
                let bits = next();
                let edges: Vec<VertexSet> = subsets(n, r)
                    .enumerate()
                    .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
                    .map(|(_, m)| VertexSet::from_mask(m))
                    .collect();
                out.push(Hypergraph::from_edge_sets(n, r, edges).unwrap());
            }
        }
    }
    out
}

fn brute_alpha(h: &Hypergraph) -> u32 {
    let n = h.vertex_count();
    let mut best = 0;
    for mask in 0..1u64 << n {
        if mask.count_ones() > best && h.edges().all(|e| e.mask() & !mask != 0) {
            best = mask.count_ones();
        }
    }
    best
}

fn brute_omega(h: &Hypergraph) -> u32 {
    let n = h.vertex_count();
    let r = h.uniformity();
    let mut best = 0;
    for mask in 0..1u64 << n {
        let k = mask.count_ones();
        if k <= best {
            continue;
        }
        let ok = k < r || subsets_of(mask, r).all(|e| h.has_edge(VertexSet::from_mask(e)));
        if ok {
            best = k;
        }
    }
    best
}

#[test]
fn alpha_and_omega_match_full_enumeration() {
    for h in random_like_graphs() {
        assert_eq!(independence_number(&h).0, brute_alpha(&h), "{h:?}");
        assert_eq!(clique_number(&h).0, brute_omega(&h), "{h:?}");
    }
    for name in ["R0", "R1", "R2", "R", "T", "T_minus"] {
        let h = catalog(name).unwrap();
        assert_eq!(independence_number(&h).0, brute_alpha(&h), "{name}");
        assert_eq!(clique_number(&h).0, brute_omega(&h), "{name}");
    }
}

/// Every q-set spans a p-clique, checked by direct enumeration.
fn brute_has_property(edges: &[u64], n: u32, r: u32, q: u32, p: u32) -> bool {
    subsets(n, q).all(|qmask| {
        if p < r {
            return true;
        }
        subsets_of(qmask, p).any(|y| subsets_of(y, r).all(|e| edges.contains(&e)))
    })
}

/// Minimum edge count with the (q,p) property over all 2^C(n,r) edge sets.
fn brute_min_property(n: u32, r: u32, q: u32, p: u32) -> u64 {
    let universe: Vec<u64> = subsets(n, r).collect();
    let m = universe.len();
    let mut best = m as u64;
    for pick in 0..1u64 << m {
        if pick.count_ones() as u64 >= best {
            continue;
        }
        let edges: Vec<u64> = (0..m)
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| universe[i])
            .collect();
        if brute_has_property(&edges, n, r, q, p) {
            best = pick.count_ones() as u64;
        }
    }
    best
}

#[test]
fn min_property_search_matches_exhaustive_oracle() {
    // C(5,3) = 10 candidate edges: 1024 edge sets
    assert_eq!(brute_min_property(5, 3, 4, 3), 3);
    assert_eq!(brute_min_property(5, 3, 5, 3), 1);
    // C(6,2) = 15 candidate edges: 32768 edge sets
    assert_eq!(brute_min_property(6, 2, 3, 2), 6);

    for (n, r, q, p, expect) in [(5, 3, 4, 3, 3), (5, 3, 5, 3, 1), (6, 2, 3, 2, 6)] {
        let res = min_edges_with_property(n, r, q, p, 10_000_000).unwrap();
        assert!(res.proved_optimal);
        assert_eq!(res.value, expect);
    }
}

/// Maximum K_4^3-free edge count by full enumeration.
fn brute_max_k4_free(n: u32) -> u64 {
    let universe: Vec<u64> = subsets(n, 3).collect();
    let m = universe.len();
    let rank_of = |mask: u64| universe.binary_search(&mask).unwrap();
    let cliques: Vec<u64> = subsets(n, 4)
        .map(|four| subsets_of(four, 3).fold(0u64, |acc, t| acc | 1 << rank_of(t)))
        .collect();
    let mut best = 0;
    for pick in 0..1u64 << m {
        if pick.count_ones() as u64 > best && cliques.iter().all(|&c| pick & c != c) {
            best = pick.count_ones() as u64;
        }
    }
    best
}

#[test]
fn max_avoiding_search_matches_exhaustive_oracle() {
    assert_eq!(brute_max_k4_free(4), 3);
    assert_eq!(brute_max_k4_free(5), 7);

    let k4 = catalog("K4").unwrap();
    for (n, expect) in [(4, 3), (5, 7)] {
        let res = max_edges_avoiding(n, std::slice::from_ref(&k4), 10_000_000, None).unwrap();
        assert!(res.proved_optimal);
        assert_eq!(res.value, expect);
    }
    // the duality pair at n = 5 splits C(5,3)
    assert_eq!(3 + 7, binomial(5, 3));
}
