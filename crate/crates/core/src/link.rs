//! The link-multigraph argument: superpose the link graphs of a 4-clique,
//! look for a triple of outside vertices carrying at least 11 of its 12
//! possible incidences, and turn such a triple into an explicit copy of the
//! catalog hypergraph R.

use crate::combin::{binomial, subsets_of};
use crate::constructions::catalog;
use crate::error::{Error, Result};
use crate::hypergraph::{verify_embedding, Hypergraph, VertexSet};

/// Multiplicities of vertex pairs outside a fixed 4-clique base: the pair
/// (x,y) counts the base vertices i with {i,x,y} an edge, so every value is
/// in 0..=4.
#[derive(Clone, Debug)]
pub struct LinkMultigraph {
    n: u32,
    base: VertexSet,
    mult: Vec<u32>, // indexed x * (n+1) + y for x < y outside the base
}

impl LinkMultigraph {
    pub fn base(&self) -> VertexSet {
        self.base
    }

    /// Vertices not in the base.
    pub fn outside(&self) -> VertexSet {
        VertexSet::full(self.n).minus(self.base)
    }

    pub fn multiplicity(&self, x: u32, y: u32) -> u32 {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        self.mult[(x * (self.n + 1) + y) as usize]
    }

    /// Total multigraph size: the sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    fn triple_weight(&self, triple: VertexSet) -> u32 {
        subsets_of(triple.mask(), 2)
            .map(|pair| {
                let vs = VertexSet::from_mask(pair).to_vec();
                self.multiplicity(vs[0], vs[1])
            })
            .sum()
    }
}

/// Build the link multigraph of `base`, which must span a 4-clique in a
/// 3-uniform hypergraph.
pub fn build_link_multigraph(h: &Hypergraph, base: VertexSet) -> Result<LinkMultigraph> {
    if h.uniformity() != 3 {
        return Err(Error::InvalidParameter(format!(
            "link argument needs a 3-uniform hypergraph, got r={}",
            h.uniformity()
        )));
    }
    if !base.is_subset_of(h.vertex_set()) {
        let v = base.minus(h.vertex_set()).vertices().next().unwrap();
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: h.vertex_count(),
        });
    }
    if base.card() != 4 {
        return Err(Error::InvalidParameter(format!(
            "base must have 4 vertices, got {}",
            base.card()
        )));
    }
    for triple in subsets_of(base.mask(), 3) {
        if !h.has_edge(VertexSet::from_mask(triple)) {
            return Err(Error::InvalidParameter(format!(
                "base {base} does not span a 4-clique: {} is not an edge",
                VertexSet::from_mask(triple)
            )));
        }
    }
    let n = h.vertex_count();
    let outside = VertexSet::full(n).minus(base);
    let mut mult = vec![0u32; ((n + 1) * (n + 1)) as usize];
    for pair in subsets_of(outside.mask(), 2) {
        let vs = VertexSet::from_mask(pair).to_vec();
        let count = base
            .vertices()
            .filter(|&i| h.has_edge(VertexSet::from_mask(pair).with(i)))
            .count() as u32;
        mult[(vs[0] * (n + 1) + vs[1]) as usize] = count;
    }
    Ok(LinkMultigraph { n, base, mult })
}

/// The multigraph size above which a heavy triple is guaranteed:
/// 3*C(n-4,2) + n - 6, for n >= 7.
pub fn heavy_triple_threshold(n: u32) -> Result<u64> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "threshold needs n >= 7, got {n}"
        )));
    }
    Ok(3 * binomial(n - 4, 2) + (n - 6) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeavyTriple {
    pub set: VertexSet,
    pub weight: u32,
}

/// First (colex order) triple of outside vertices whose three pairs carry at
/// least `threshold` incidences in total. The interesting threshold is 11:
/// of the 12 incidences of a triple, at most one may then be missing.
pub fn find_heavy_triple(m: &LinkMultigraph, threshold: u32) -> Option<HeavyTriple> {
    for triple in subsets_of(m.outside().mask(), 3) {
        let set = VertexSet::from_mask(triple);
        let weight = m.triple_weight(set);
        if weight >= threshold {
            return Some(HeavyTriple { set, weight });
        }
    }
    None
}

/// Convert a triple of weight >= 11 over a 4-clique into an explicit copy of
/// the catalog hypergraph R: at most one of the 12 incidences is missing,
/// and R is exactly the 12-incidence configuration minus one. Returns the
/// injection (R vertex `i+1` maps to entry `i`), validated edge by edge.
pub fn extract_r_copy(h: &Hypergraph, base: VertexSet, triple: VertexSet) -> Result<Vec<u32>> {
    let m = build_link_multigraph(h, base)?;
    if triple.card() != 3 || !triple.is_subset_of(m.outside()) {
        return Err(Error::InvalidParameter(format!(
            "triple {triple} must have 3 vertices outside the base {base}"
        )));
    }
    let mut missing: Vec<(u32, u32, u32)> = Vec::new();
    for pair in subsets_of(triple.mask(), 2) {
        for i in base.vertices() {
            if !h.has_edge(VertexSet::from_mask(pair).with(i)) {
                let vs = VertexSet::from_mask(pair).to_vec();
                missing.push((i, vs[0], vs[1]));
            }
        }
    }
    if missing.len() > 1 {
        return Err(Error::InvalidParameter(format!(
            "triple {triple} has weight {} < 11 over base {base}",
            m.triple_weight(triple)
        )));
    }

    // R's one missing cross edge is {1,5,6}: send the missing incidence
    // there, order the rest ascending
    let mut map = Vec::with_capacity(7);
    match missing.first() {
        None => {
            map.extend(base.vertices());
            map.extend(triple.vertices());
        }
        Some(&(i0, x0, y0)) => {
            map.push(i0);
            map.extend(base.vertices().filter(|&v| v != i0));
            map.push(x0);
            map.push(y0);
            map.extend(triple.vertices().filter(|&v| v != x0 && v != y0));
        }
    }

    let pattern = catalog("R")?;
    if !verify_embedding(h, &pattern, &map) {
        return Err(Error::InvariantViolation(format!(
            "constructed map {map:?} is not an embedding of R"
        )));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base1234() -> VertexSet {
        VertexSet::from_vertices(&[1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn multigraph_of_r0() {
        let m = build_link_multigraph(&catalog("R0").unwrap(), base1234()).unwrap();
        for (x, y) in [(5, 6), (5, 7), (6, 7)] {
            assert_eq!(m.multiplicity(x, y), 4);
        }
        assert_eq!(m.total(), 12);
    }

    #[test]
    fn multigraph_of_r() {
        let m = build_link_multigraph(&catalog("R").unwrap(), base1234()).unwrap();
        assert_eq!(m.multiplicity(5, 6), 3);
        assert_eq!(m.multiplicity(5, 7), 4);
        assert_eq!(m.multiplicity(6, 7), 4);
        assert_eq!(m.total(), 11);
    }

    #[test]
    fn no_outside_vertices_means_empty_multigraph() {
        let k4 = Hypergraph::complete(4, 3).unwrap();
        let m = build_link_multigraph(&k4, base1234()).unwrap();
        assert_eq!(m.total(), 0);
        assert!(find_heavy_triple(&m, 11).is_none());
    }

    #[test]
    fn rejects_non_cliques() {
        let h = catalog("T").unwrap(); // K_4^3 on [4]? no: {1,2,3},{1,2,4},{1,3,4},{2,3,4} all edges of T
        assert!(build_link_multigraph(&h, base1234()).is_ok());
        let empty = Hypergraph::empty(7, 3).unwrap();
        assert!(matches!(
            build_link_multigraph(&empty, base1234()),
            Err(Error::InvalidParameter(_))
        ));
        let five = VertexSet::from_vertices(&[1, 2, 3, 4, 5]).unwrap();
        assert!(build_link_multigraph(&catalog("R0").unwrap(), five).is_err());
    }

    #[test]
    fn heavy_triples_and_extraction() {
        let r0 = catalog("R0").unwrap();
        let m = build_link_multigraph(&r0, base1234()).unwrap();
        let heavy = find_heavy_triple(&m, 11).unwrap();
        assert_eq!(heavy.set, VertexSet::from_vertices(&[5, 6, 7]).unwrap());
        assert_eq!(heavy.weight, 12);
        let map = extract_r_copy(&r0, base1234(), heavy.set).unwrap();
        assert!(verify_embedding(&r0, &catalog("R").unwrap(), &map));

        let r = catalog("R").unwrap();
        let m = build_link_multigraph(&r, base1234()).unwrap();
        let heavy = find_heavy_triple(&m, 11).unwrap();
        assert_eq!(heavy.weight, 11);
        let map = extract_r_copy(&r, base1234(), heavy.set).unwrap();
        assert_eq!(map[0], 1); // the missing incidence lands on R's vertex 1
        assert_eq!(&map[4..6], &[5, 6]);
        assert!(verify_embedding(&r, &catalog("R").unwrap(), &map));
    }

    #[test]
    fn extraction_with_extra_isolated_vertices() {
        let r0 = catalog("R0").unwrap();
        let padded = r0
            .disjoint_union(&Hypergraph::empty(3, 3).unwrap())
            .unwrap();
        let triple = VertexSet::from_vertices(&[5, 6, 7]).unwrap();
        let map = extract_r_copy(&padded, base1234(), triple).unwrap();
        assert!(verify_embedding(&padded, &catalog("R").unwrap(), &map));
        assert!(map.iter().all(|&v| v <= 7));
    }

    #[test]
    fn light_triples_are_rejected() {
        let r1 = catalog("R1").unwrap(); // three incidences missing
        let triple = VertexSet::from_vertices(&[5, 6, 7]).unwrap();
        assert!(matches!(
            extract_r_copy(&r1, base1234(), triple),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn threshold_formula() {
        assert_eq!(heavy_triple_threshold(7).unwrap(), 10);
        assert_eq!(heavy_triple_threshold(10).unwrap(), 49);
        assert!(heavy_triple_threshold(6).is_err());
        let mut prev = 0;
        for n in 7..=20 {
            let t = heavy_triple_threshold(n).unwrap();
            assert!(t > prev);
            prev = t;
        }
    }
}
