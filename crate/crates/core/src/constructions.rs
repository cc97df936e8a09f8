//! The named hypergraphs: balanced unions of cliques, the R/T catalog, the
//! blow-up T', the low-independence unions H1/H2, and the crossing-triple
//! construction.

use crate::combin;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Union of a vertex-disjoint complete parts covering {1..n}: parts are
/// contiguous blocks with sizes in {floor(n/a), ceil(n/a)}, larger parts
/// first, so the edge set is reproducible.
pub fn balanced_union(n: u32, r: u32, a: u32) -> Result<Hypergraph> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 parts, got {a}"
        )));
    }
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut start = 1u32;
    for i in 0..a {
        let size = if i < n % a { n / a + 1 } else { n / a };
        if size >= r {
            for mask in combin::subsets(size, r) {
                edges.push(
                    combin::bit_positions(mask)
                        .iter()
                        .map(|&b| start + b)
                        .collect(),
                );
            }
        }
        start += size;
    }
    Hypergraph::new(n, r, &edges)
}

// The seven-vertex catalog family: a 4-clique on [4] plus all triples with
// one vertex in [4] and two in {5,6,7}.
const R0_EDGES: [[u32; 3]; 16] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [1, 5, 6],
    [1, 5, 7],
    [1, 6, 7],
    [2, 3, 4],
    [2, 5, 6],
    [2, 5, 7],
    [2, 6, 7],
    [3, 5, 6],
    [3, 5, 7],
    [3, 6, 7],
    [4, 5, 6],
    [4, 5, 7],
    [4, 6, 7],
];

const R1_REMOVED: [[u32; 3]; 3] = [[1, 5, 6], [2, 5, 7], [3, 6, 7]];
const R2_REMOVED: [[u32; 3]; 3] = [[1, 5, 6], [1, 5, 7], [3, 6, 7]];
const R_REMOVED: [[u32; 3]; 1] = [[1, 5, 6]];

// Six-vertex hypergraph: all triples of [6] except five.
const T_EDGES: [[u32; 3]; 15] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 4],
    [2, 3, 5],
    [2, 3, 6],
    [2, 4, 5],
    [3, 5, 6],
    [4, 5, 6],
];

const T_MINUS_REMOVED: [[u32; 3]; 1] = [[1, 4, 5]];

/// Look up a named hypergraph: `R0`, `R1`, `R2`, `R`, `T`, `T_minus`, or
/// `K<t>` for the complete 3-uniform clique on t vertices. Names are
/// case-insensitive and `-` may stand for `_`.
pub fn catalog(name: &str) -> Result<Hypergraph> {
    let key = name.to_ascii_uppercase().replace('-', "_");
    match key.as_str() {
        "R0" => from_fixed(7, &R0_EDGES, &[]),
        "R1" => from_fixed(7, &R0_EDGES, &R1_REMOVED),
        "R2" => from_fixed(7, &R0_EDGES, &R2_REMOVED),
        "R" => from_fixed(7, &R0_EDGES, &R_REMOVED),
        "T" => from_fixed(6, &T_EDGES, &[]),
        "T_MINUS" => from_fixed(6, &T_EDGES, &T_MINUS_REMOVED),
        _ => {
            if let Some(t) = key.strip_prefix('K').and_then(|s| s.parse::<u32>().ok()) {
                return Hypergraph::complete(t, 3)
                    .map_err(|_| Error::UnknownCatalog(name.to_string()));
            }
            Err(Error::UnknownCatalog(name.to_string()))
        }
    }
}

fn from_fixed(n: u32, base: &[[u32; 3]], removed: &[[u32; 3]]) -> Result<Hypergraph> {
    let edges: Vec<Vec<u32>> = base
        .iter()
        .filter(|e| !removed.contains(e))
        .map(|e| e.to_vec())
        .collect();
    debug_assert_eq!(edges.len(), base.len() - removed.len());
    Hypergraph::new(n, 3, &edges)
}

/// The 9-vertex blow-up of T: vertices 1, 2, 3 doubled, 4, 5, 6 kept single.
pub fn t_prime() -> Hypergraph {
    catalog("T")
        .expect("fixed catalog entry")
        .blow_up(&[2, 2, 2, 1, 1, 1])
        .expect("9 vertices fit")
}

/// Vertex-disjoint union of R with (p-3)/2 copies of K_4^3: 2p+1 vertices
/// and independence number p, for odd p >= 3.
pub fn h1(p: u32) -> Result<Hypergraph> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "h1 needs odd p >= 3, got {p}"
        )));
    }
    let mut h = catalog("R")?;
    let k4 = Hypergraph::complete(4, 3)?;
    for _ in 0..(p - 3) / 2 {
        h = h.disjoint_union(&k4)?;
    }
    Ok(h)
}

/// Vertex-disjoint union of T' with (p-4)/2 copies of K_4^3: 2p+1 vertices
/// and independence number p, for even p >= 4.
pub fn h2(p: u32) -> Result<Hypergraph> {
    if p < 4 || !p.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "h2 needs even p >= 4, got {p}"
        )));
    }
    let mut h = t_prime();
    let k4 = Hypergraph::complete(4, 3)?;
    for _ in 0..(p - 4) / 2 {
        h = h.disjoint_union(&k4)?;
    }
    Ok(h)
}

/// All triples meeting both halves of an evenly split 2n-vertex set — the
/// complement of [`balanced_union`]`(2n, 3, 2)`, with C(2n,3) - 2C(n,3)
/// edges.
pub fn crossing_construction(half: u32) -> Result<Hypergraph> {
    if half < 2 {
        return Err(Error::InvalidParameter(format!(
            "half size must be at least 2, got {half}"
        )));
    }
    Ok(balanced_union(2 * half, 3, 2)?.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binomial;
    use crate::hypergraph::VertexSet;
    use crate::invariants::{has_property, independence_number, PropertyPair};

    #[test]
    fn balanced_union_examples() {
        let h8 = balanced_union(8, 3, 2).unwrap();
        assert_eq!(h8.edge_count(), 8);
        assert!(h8.has_edge(VertexSet::from_vertices(&[1, 2, 3]).unwrap()));
        assert!(h8.has_edge(VertexSet::from_vertices(&[6, 7, 8]).unwrap()));
        assert!(!h8.has_edge(VertexSet::from_vertices(&[4, 5, 6]).unwrap()));

        // sizes 4,3: C(4,3) + C(3,3) = 5
        assert_eq!(balanced_union(7, 3, 2).unwrap().edge_count(), 5);
        assert_eq!(balanced_union(9, 3, 3).unwrap().edge_count(), 3);
        assert!(balanced_union(8, 3, 1).is_err());

        // each part is a clique, and nothing larger fits
        let part = h8
            .induced(VertexSet::from_vertices(&[1, 2, 3, 4]).unwrap())
            .unwrap();
        assert_eq!(part, Hypergraph::complete(4, 3).unwrap());
        let k5 = Hypergraph::complete(5, 3).unwrap();
        assert!(!h8.contains_copy(&k5).unwrap());
    }

    #[test]
    fn catalog_edge_counts() {
        for (name, count) in [
            ("R0", 16),
            ("R1", 13),
            ("R2", 13),
            ("R", 15),
            ("T", 15),
            ("T_minus", 14),
        ] {
            assert_eq!(catalog(name).unwrap().edge_count(), count, "{name}");
        }
        assert_eq!(catalog("K4").unwrap(), Hypergraph::complete(4, 3).unwrap());
        assert!(matches!(catalog("Q7"), Err(Error::UnknownCatalog(_))));

        let r0 = catalog("R0").unwrap();
        assert_eq!(r0.complement().edge_count(), 35 - 16);
        assert_eq!(
            r0.induced(VertexSet::from_vertices(&[1, 2, 3, 4]).unwrap())
                .unwrap(),
            Hypergraph::complete(4, 3).unwrap()
        );
    }

    #[test]
    fn removed_edges_were_present() {
        let r0 = catalog("R0").unwrap();
        for e in R1_REMOVED.iter().chain(&R2_REMOVED).chain(&R_REMOVED) {
            assert!(r0.has_edge(VertexSet::from_vertices(e).unwrap()));
        }
        let t = catalog("T").unwrap();
        for e in &T_MINUS_REMOVED {
            assert!(t.has_edge(VertexSet::from_vertices(e).unwrap()));
        }
    }

    #[test]
    fn r_family_nesting() {
        let r0 = catalog("R0").unwrap();
        assert!(r0.contains_copy(&catalog("R1").unwrap()).unwrap());
        assert!(r0.contains_copy(&catalog("R").unwrap()).unwrap());
        assert!(!catalog("R1")
            .unwrap()
            .is_isomorphic_to(&catalog("R2").unwrap()));
        assert!(!catalog("R0")
            .unwrap()
            .is_isomorphic_to(&catalog("R").unwrap()));
    }

    #[test]
    fn t_prime_shape() {
        let tp = t_prime();
        assert_eq!(tp.vertex_count(), 9);
        assert_eq!(tp.edge_count(), 53);
        assert_eq!(independence_number(&tp).0, 4);
        // every edge projects to a T-edge with distinct blob images
        let t = catalog("T").unwrap();
        let blob_of = |v: u32| match v {
            1 | 2 => 1,
            3 | 4 => 2,
            5 | 6 => 3,
            v => v - 3,
        };
        for e in tp.edges() {
            let mut blobs: Vec<u32> = e.vertices().map(blob_of).collect();
            blobs.sort_unstable();
            blobs.dedup();
            assert_eq!(blobs.len(), 3);
            assert!(t.has_edge(VertexSet::from_vertices(&blobs).unwrap()));
        }
    }

    #[test]
    fn h1_h2_examples() {
        let h = h1(3).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h, catalog("R").unwrap());
        let h = h1(5).unwrap();
        assert_eq!(h.vertex_count(), 11);
        assert_eq!(h.edge_count(), 15 + 4);
        assert_eq!(independence_number(&h).0, 5);
        assert!(h1(4).is_err());
        assert!(h1(1).is_err());

        let h = h2(4).unwrap();
        assert_eq!(h.vertex_count(), 9);
        assert_eq!(h, t_prime());
        let h = h2(6).unwrap();
        assert_eq!(h.vertex_count(), 13);
        assert_eq!(independence_number(&h).0, 6);
        assert!(h2(5).is_err());
        assert!(h2(2).is_err());
    }

    #[test]
    fn crossing_examples() {
        let c4 = crossing_construction(4).unwrap();
        assert_eq!(c4.edge_count(), binomial(8, 3) - 2 * binomial(4, 3));
        assert_eq!(c4, balanced_union(8, 3, 2).unwrap().complement());
        // degenerate half: parts smaller than r leave nothing to remove
        let c2 = crossing_construction(2).unwrap();
        assert_eq!(c2, Hypergraph::complete(4, 3).unwrap());
        assert!(crossing_construction(1).is_err());
    }

    #[test]
    fn balanced_union_has_covering_property() {
        let h = balanced_union(10, 3, 2).unwrap();
        for p in 2..=4 {
            assert!(has_property(&h, PropertyPair::new(2 * p, p).unwrap())
                .unwrap()
                .holds());
            assert!(
                has_property(&h, PropertyPair::new(2 * p + 1, p + 1).unwrap())
                    .unwrap()
                    .holds()
            );
        }
    }
}
