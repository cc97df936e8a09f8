//! Property-based invariants over randomly generated small hypergraphs.

use proptest::prelude::*;

use turan_core::combin::{binomial, subsets};
use turan_core::format;
use turan_core::hypergraph::{Hypergraph, VertexSet};
use turan_core::invariants::{clique_number, has_property, independence_number, PropertyPair};
use turan_core::search::property_via_complement;

prop_compose! {
    fn small_hypergraph(max_n: u32)(n in 4..=max_n)(
        n in Just(n),
        bits in any::<u64>(),
    ) -> Hypergraph {
        let edges: Vec<VertexSet> = subsets(n, 3)
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, m)| VertexSet::from_mask(m))
            .collect();
        Hypergraph::from_edge_sets(n, 3, edges).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(h in small_hypergraph(9)) {
        let c = h.complement();
        prop_assert_eq!(h.edge_count() + c.edge_count(),
            binomial(h.vertex_count(), h.uniformity()));
        prop_assert_eq!(c.complement(), h);
    }

    #[test]
    fn induced_commutes_with_complement(h in small_hypergraph(9), smask in any::<u64>()) {
        let n = h.vertex_count();
        let s = VertexSet::from_mask(smask & VertexSet::full(n).mask());
        prop_assume!(s.card() >= 3);
        let left = h.induced(s).unwrap().complement();
        let right = h.complement().induced(s).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn all_ones_blow_up_is_isomorphic(h in small_hypergraph(7)) {
        let ones = vec![1u32; h.vertex_count() as usize];
        prop_assert!(h.blow_up(&ones).unwrap().is_isomorphic_to(&h));
    }

    #[test]
    fn union_independence_adds_and_cliques_max(
        a in small_hypergraph(7),
        b in small_hypergraph(7),
    ) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(
            independence_number(&u).0,
            independence_number(&a).0 + independence_number(&b).0
        );
        prop_assert_eq!(
            clique_number(&u).0,
            clique_number(&a).0.max(clique_number(&b).0)
        );
    }

    #[test]
    fn containment_is_reflexive_and_edge_monotone(h in small_hypergraph(7), extra in any::<u64>()) {
        prop_assert!(h.contains_copy(&h).unwrap());
        // add one absent edge; containment of the old graph must survive
        let n = h.vertex_count();
        let absent: Vec<u64> = subsets(n, 3).filter(|&m| !h.has_edge(VertexSet::from_mask(m))).collect();
        prop_assume!(!absent.is_empty());
        let pick = absent[(extra % absent.len() as u64) as usize];
        let bigger = Hypergraph::from_edge_sets(
            n,
            3,
            h.edges().chain(std::iter::once(VertexSet::from_mask(pick))),
        )
        .unwrap();
        prop_assert!(bigger.contains_copy(&h).unwrap());
    }

    #[test]
    fn formats_round_trip(h in small_hypergraph(9)) {
        prop_assert_eq!(&format::parse_text(&format::write_text(&h)).unwrap(), &h);
        prop_assert_eq!(&format::from_json(&format::to_json(&h)).unwrap(), &h);
    }

    #[test]
    fn property_routes_agree(h in small_hypergraph(9), q in 3..=6u32, p in 1..=4u32) {
        prop_assume!(p <= q && q <= h.vertex_count());
        let pp = PropertyPair::new(q, p).unwrap();
        prop_assert_eq!(
            has_property(&h, pp).unwrap().holds(),
            property_via_complement(&h, pp).unwrap().holds()
        );
    }

    #[test]
    fn blow_up_independence_never_shrinks(h in small_hypergraph(6), mults in proptest::collection::vec(1..=2u32, 6)) {
        let n = h.vertex_count() as usize;
        let b = h.blow_up(&mults[..n]).unwrap();
        prop_assert!(independence_number(&b).0 >= independence_number(&h).0);
    }
}
