//! The core representation: r-uniform hypergraphs on up to 64 labeled
//! vertices, with vertex sets as single-word bitmasks.

use std::fmt;

use crate::combin::{self, binomial, MAX_VERTICES};
use crate::error::{Error, Result};

/// A subset of the vertices `1..=64`, stored as a bitmask (bit `v-1` is
/// vertex `v`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The full set `{1..n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Build from 1-indexed vertex labels; duplicates collapse.
    pub fn from_vertices(vertices: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1u64 << (v - 1);
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn with(self, v: u32) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An r-uniform hypergraph on vertices `1..=n`, `2 <= r <= n <= 64`.
///
/// Edges are r-subsets stored as bitmasks in ascending numeric order, which
/// for equal-size sets is exactly colexicographic order; edge iteration and
/// the text/JSON formats are therefore colex-sorted by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    r: u32,
    edges: Vec<u64>,
}

impl Hypergraph {
    /// Build from 1-indexed edge lists. Duplicate edges collapse; an edge
    /// with a repeated or out-of-range vertex is rejected.
    pub fn new(n: u32, r: u32, edges: &[Vec<u32>]) -> Result<Self> {
        check_dimensions(n, r)?;
        let mut masks = Vec::with_capacity(edges.len());
        for edge in edges {
            masks.push(edge_mask(edge, n, r)?);
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Hypergraph { n, r, edges: masks })
    }

    /// Build from vertex-set edges.
    pub fn from_edge_sets<I>(n: u32, r: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_dimensions(n, r)?;
        let full = VertexSet::full(n);
        let mut masks = Vec::new();
        for e in edges {
            if !e.is_subset_of(full) {
                let v = e.minus(full).vertices().next().unwrap();
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if e.card() != r {
                return Err(Error::WrongEdgeSize {
                    got: e.card(),
                    want: r,
                });
            }
            masks.push(e.mask());
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Hypergraph { n, r, edges: masks })
    }

    pub fn empty(n: u32, r: u32) -> Result<Self> {
        check_dimensions(n, r)?;
        Ok(Hypergraph {
            n,
            r,
            edges: Vec::new(),
        })
    }

    /// The complete hypergraph K_n^r.
    pub fn complete(n: u32, r: u32) -> Result<Self> {
        check_dimensions(n, r)?;
        Ok(Hypergraph {
            n,
            r,
            edges: combin::subsets(n, r).collect(),
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn uniformity(&self) -> u32 {
        self.r
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().map(|&m| VertexSet::from_mask(m))
    }

    pub(crate) fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.has_edge_mask(e.mask())
    }

    pub(crate) fn has_edge_mask(&self, mask: u64) -> bool {
        self.edges.binary_search(&mask).is_ok()
    }

    /// Number of edges containing vertex `v`.
    pub fn degree(&self, v: u32) -> u32 {
        let bit = 1u64 << (v - 1);
        self.edges.iter().filter(|&&e| e & bit != 0).count() as u32
    }

    /// All r-sets of `{1..n}` that are not edges; C(n,r) - |edges| of them.
    pub fn complement(&self) -> Hypergraph {
        let cap = binomial(self.n, self.r) - self.edge_count();
        let mut out = Vec::with_capacity(cap as usize);
        let mut present = self.edges.iter().peekable();
        for mask in combin::subsets(self.n, self.r) {
            match present.peek() {
                Some(&&e) if e == mask => {
                    present.next();
                }
                _ => out.push(mask),
            }
        }
        Hypergraph {
            n: self.n,
            r: self.r,
            edges: out,
        }
    }

    /// Sub-hypergraph induced by `s`, relabeled `1..|s|` by increasing
    /// original label. Rejects `|s| < r`.
    pub fn induced(&self, s: VertexSet) -> Result<Hypergraph> {
        Ok(self.induced_with_map(s)?.0)
    }

    /// As [`induced`](Self::induced), also returning the label map:
    /// `map[i]` is the original label of new vertex `i+1`.
    pub fn induced_with_map(&self, s: VertexSet) -> Result<(Hypergraph, Vec<u32>)> {
        if !s.is_subset_of(self.vertex_set()) {
            let v = s.minus(self.vertex_set()).vertices().next().unwrap();
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let k = s.card();
        if k < self.r {
            return Err(Error::SetTooSmall {
                got: k,
                need: self.r,
            });
        }
        let map = s.to_vec();
        let mut compress = [0u32; 65];
        for (i, &v) in map.iter().enumerate() {
            compress[v as usize] = i as u32;
        }
        let smask = s.mask();
        let mut edges = Vec::new();
        for &e in &self.edges {
            if e & !smask == 0 {
                let mut out = 0u64;
                let mut rest = e;
                while rest != 0 {
                    let v = rest.trailing_zeros() + 1;
                    out |= 1u64 << compress[v as usize];
                    rest &= rest - 1;
                }
                edges.push(out);
            }
        }
        // bit compression is monotone, so colex order is preserved
        Ok((
            Hypergraph {
                n: k,
                r: self.r,
                edges,
            },
            map,
        ))
    }

    /// Vertex-disjoint union; the other graph's vertices are shifted up by
    /// `self.n`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return Err(Error::UniformityMismatch {
                left: self.r,
                right: other.r,
            });
        }
        let n = self.n as u64 + other.n as u64;
        if n > MAX_VERTICES as u64 {
            return Err(Error::TooManyVertices(n));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&e| e << self.n));
        Ok(Hypergraph {
            n: n as u32,
            r: self.r,
            edges,
        })
    }

    /// Blow-up: vertex `v` becomes a blob of `multiplicities[v-1]` fresh
    /// vertices (blobs laid out in vertex order), and an r-set of the result
    /// is an edge exactly when its vertices lie in r distinct blobs whose
    /// originals form an edge. Sets touching a blob twice are non-edges.
    pub fn blow_up(&self, multiplicities: &[u32]) -> Result<Hypergraph> {
        if multiplicities.len() != self.n as usize {
            return Err(Error::InvalidParameter(format!(
                "expected {} multiplicities, got {}",
                self.n,
                multiplicities.len()
            )));
        }
        let mut offset = vec![0u32; self.n as usize];
        let mut total = 0u64;
        for (i, &m) in multiplicities.iter().enumerate() {
            if m == 0 {
                return Err(Error::ZeroMultiplicity(i as u32 + 1));
            }
            offset[i] = total as u32;
            total += m as u64;
        }
        if total > MAX_VERTICES as u64 {
            return Err(Error::TooManyVertices(total));
        }
        let mut edges = Vec::new();
        for &e in &self.edges {
            let verts = combin::bit_positions(e);
            let mut choice = vec![0u32; verts.len()];
            loop {
                let mut mask = 0u64;
                for (i, &p) in verts.iter().enumerate() {
                    mask |= 1u64 << (offset[p as usize] + choice[i]);
                }
                edges.push(mask);
                let mut advanced = false;
                for i in (0..verts.len()).rev() {
                    choice[i] += 1;
                    if choice[i] < multiplicities[verts[i] as usize] {
                        advanced = true;
                        break;
                    }
                    choice[i] = 0;
                }
                if !advanced {
                    break;
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph {
            n: total as u32,
            r: self.r,
            edges,
        })
    }

    /// Does the host contain a copy of `pattern`: an injective vertex map
    /// sending every pattern edge to an edge? Pattern non-edges are
    /// unconstrained.
    pub fn contains_copy(&self, pattern: &Hypergraph) -> Result<bool> {
        Ok(self.find_copy_of(pattern)?.is_some())
    }

    /// Like [`contains_copy`](Self::contains_copy) but returns a witness
    /// injection: `map[i]` is the host vertex for pattern vertex `i+1`.
    pub fn find_copy_of(&self, pattern: &Hypergraph) -> Result<Option<Vec<u32>>> {
        if self.r != pattern.r {
            return Err(Error::UniformityMismatch {
                left: self.r,
                right: pattern.r,
            });
        }
        if pattern.n > self.n {
            return Ok(None);
        }
        let host_deg: Vec<u32> = (0..=self.n)
            .map(|v| if v == 0 { 0 } else { self.degree(v) })
            .collect();
        let mut map = vec![0u32; pattern.n as usize];
        let plan = EmbedPlan::new(pattern, 0);
        let found = plan.run(
            self.n,
            &|m| self.has_edge_mask(m),
            Some(&host_deg),
            &mut map,
            0,
        );
        Ok(if found { Some(map) } else { None })
    }

    /// Exact isomorphism: some vertex bijection maps the edge set onto the
    /// other edge set. Intended for small vertex counts.
    pub fn is_isomorphic_to(&self, other: &Hypergraph) -> bool {
        if self.n != other.n || self.r != other.r || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut da: Vec<u32> = (1..=self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<u32> = (1..=other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        // An injective edge-preserving map between equal vertex counts is a
        // bijection, and with equal edge counts it is edge-onto.
        other
            .find_copy_of(self)
            .expect("uniformities already matched")
            .is_some()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(n={}, r={}, m={})",
            self.n,
            self.r,
            self.edges.len()
        )
    }
}

fn check_dimensions(n: u32, r: u32) -> Result<()> {
    if r < 2 || r > n || n > MAX_VERTICES {
        Err(Error::BadDimensions { n, r })
    } else {
        Ok(())
    }
}

fn edge_mask(edge: &[u32], n: u32, r: u32) -> Result<u64> {
    let mut mask = 0u64;
    for &v in edge {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        mask |= 1u64 << (v - 1);
    }
    if mask.count_ones() != r {
        return Err(Error::WrongEdgeSize {
            got: mask.count_ones(),
            want: r,
        });
    }
    Ok(mask)
}

/// Check that `map` (pattern vertex `i+1` -> `map[i]`) is injective and sends
/// every pattern edge to a host edge.
pub fn verify_embedding(host: &Hypergraph, pattern: &Hypergraph, map: &[u32]) -> bool {
    if map.len() != pattern.n as usize || host.r != pattern.r {
        return false;
    }
    let mut used = 0u64;
    for &hv in map {
        if hv == 0 || hv > host.n || used >> (hv - 1) & 1 == 1 {
            return false;
        }
        used |= 1u64 << (hv - 1);
    }
    pattern.edges.iter().all(|&e| {
        let mut m = 0u64;
        let mut rest = e;
        while rest != 0 {
            let pv = rest.trailing_zeros() as usize;
            m |= 1u64 << (map[pv] - 1);
            rest &= rest - 1;
        }
        host.has_edge_mask(m)
    })
}

/// Precomputed schedule for the backtracking embedding search: assignment
/// order (unassigned pattern vertices by descending degree) and, per depth,
/// the pattern edges whose last vertex gets assigned there. Build once,
/// run against many hosts or partial maps with the same pre-assigned
/// vertices.
pub(crate) struct EmbedPlan {
    pat_n: u32,
    order: Vec<u32>,
    edges_at: Vec<Vec<u64>>,
    pat_deg: Vec<u32>,
}

impl EmbedPlan {
    /// `preassigned` is the mask of pattern vertices the caller will seed in
    /// `map` before every run.
    pub(crate) fn new(pattern: &Hypergraph, preassigned: u64) -> EmbedPlan {
        let pat_deg: Vec<u32> = (1..=pattern.n).map(|v| pattern.degree(v)).collect();
        let mut order: Vec<u32> = (1..=pattern.n)
            .filter(|&v| preassigned >> (v - 1) & 1 == 0)
            .collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pat_deg[v as usize - 1]), v));

        // depth at which each pattern vertex becomes assigned; 0 = seeded
        let mut assign_depth = vec![0usize; pattern.n as usize];
        for (i, &v) in order.iter().enumerate() {
            assign_depth[v as usize - 1] = i + 1;
        }
        let mut edges_at: Vec<Vec<u64>> = vec![Vec::new(); order.len() + 1];
        for &e in &pattern.edges {
            let depth = combin::bit_positions(e)
                .iter()
                .map(|&p| assign_depth[p as usize])
                .max()
                .unwrap();
            edges_at[depth].push(e);
        }
        EmbedPlan {
            pat_n: pattern.n,
            order,
            edges_at,
            pat_deg,
        }
    }

    /// Extend the seeded partial map (0 = unassigned; `used` = host vertices
    /// the seed occupies) to a full embedding. Host candidates are tried in
    /// ascending label order, so the first witness found is deterministic.
    pub(crate) fn run(
        &self,
        host_n: u32,
        host_has_edge: &dyn Fn(u64) -> bool,
        host_deg: Option<&[u32]>,
        map: &mut [u32],
        used: u64,
    ) -> bool {
        debug_assert_eq!(map.len(), self.pat_n as usize);
        // edges fully covered by the seed are checked up front
        if !self.edges_at[0]
            .iter()
            .all(|&e| mapped_edge_ok(e, map, host_has_edge))
        {
            return false;
        }
        self.rec(0, host_n, host_has_edge, host_deg, map, used)
    }

    fn rec(
        &self,
        depth: usize,
        host_n: u32,
        host_has_edge: &dyn Fn(u64) -> bool,
        host_deg: Option<&[u32]>,
        map: &mut [u32],
        used: u64,
    ) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth] as usize - 1;
        for hv in 1..=host_n {
            if used >> (hv - 1) & 1 == 1 {
                continue;
            }
            if let Some(deg) = host_deg {
                if deg[hv as usize] < self.pat_deg[pv] {
                    continue;
                }
            }
            map[pv] = hv;
            if self.edges_at[depth + 1]
                .iter()
                .all(|&e| mapped_edge_ok(e, map, host_has_edge))
                && self.rec(
                    depth + 1,
                    host_n,
                    host_has_edge,
                    host_deg,
                    map,
                    used | 1u64 << (hv - 1),
                )
            {
                return true;
            }
            map[pv] = 0;
        }
        false
    }
}

fn mapped_edge_ok(e: u64, map: &[u32], host_has_edge: &dyn Fn(u64) -> bool) -> bool {
    let mut m = 0u64;
    let mut rest = e;
    while rest != 0 {
        let pv = rest.trailing_zeros() as usize;
        let hv = map[pv];
        debug_assert!(hv != 0, "edge scheduled before its vertices are assigned");
        m |= 1u64 << (hv - 1);
        rest &= rest - 1;
    }
    host_has_edge(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Hypergraph {
        Hypergraph::complete(4, 3).unwrap()
    }

    #[test]
    fn make_complete_clique() {
        let h = Hypergraph::new(
            4,
            3,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
        )
        .unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h, k4());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(5, 3, &[vec![1, 2, 6]]),
            Err(Error::VertexOutOfRange { vertex: 6, n: 5 })
        ));
        assert!(matches!(
            Hypergraph::new(5, 3, &[vec![1, 2]]),
            Err(Error::WrongEdgeSize { got: 2, want: 3 })
        ));
        assert!(matches!(
            Hypergraph::new(5, 3, &[vec![1, 2, 2]]),
            Err(Error::WrongEdgeSize { got: 2, want: 3 })
        ));
        assert!(matches!(
            Hypergraph::new(65, 3, &[]),
            Err(Error::BadDimensions { .. })
        ));
        assert!(matches!(
            Hypergraph::new(4, 5, &[]),
            Err(Error::BadDimensions { .. })
        ));
    }

    #[test]
    fn duplicates_collapse() {
        let h = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![3, 2, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn containment_is_transitive_along_subgraph_chains() {
        let a = Hypergraph::new(
            6,
            3,
            &[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5], vec![4, 5, 6]],
        )
        .unwrap();
        let b = Hypergraph::new(6, 3, &[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]).unwrap();
        let c = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        assert!(a.contains_copy(&b).unwrap());
        assert!(b.contains_copy(&c).unwrap());
        assert!(a.contains_copy(&c).unwrap());
        // an induced restriction is always a copy inside the original
        let sub = a
            .induced(VertexSet::from_vertices(&[2, 3, 4, 5]).unwrap())
            .unwrap();
        assert!(a.contains_copy(&sub).unwrap());
    }

    #[test]
    fn complement_counts() {
        assert_eq!(k4().complement().edge_count(), 0);
        let empty5 = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(empty5.complement().edge_count(), 10);
        assert_eq!(empty5.complement().complement(), empty5);
    }

    #[test]
    fn induced_relabels() {
        let h = Hypergraph::new(6, 3, &[vec![2, 4, 6], vec![1, 2, 3]]).unwrap();
        let (sub, map) = h
            .induced_with_map(VertexSet::from_vertices(&[2, 4, 6]).unwrap())
            .unwrap();
        assert_eq!(map, vec![2, 4, 6]);
        assert_eq!(sub.edge_count(), 1);
        assert!(sub.has_edge(VertexSet::from_vertices(&[1, 2, 3]).unwrap()));
    }

    #[test]
    fn induced_rejects_small_sets() {
        let h = Hypergraph::complete(6, 3).unwrap();
        let s = VertexSet::from_vertices(&[1, 2]).unwrap();
        assert!(matches!(
            h.induced(s),
            Err(Error::SetTooSmall { got: 2, need: 3 })
        ));
        let any4 = VertexSet::from_vertices(&[2, 3, 5, 6]).unwrap();
        assert_eq!(h.induced(any4).unwrap(), k4());
    }

    #[test]
    fn disjoint_union_shifts() {
        let u = k4().disjoint_union(&k4()).unwrap();
        assert_eq!(u.vertex_count(), 8);
        assert_eq!(u.edge_count(), 8);
        assert!(u.has_edge(VertexSet::from_vertices(&[5, 6, 7]).unwrap()));
        let g2 = Hypergraph::complete(3, 2).unwrap();
        assert!(matches!(
            k4().disjoint_union(&g2),
            Err(Error::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn blow_up_single_edge() {
        let h = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        let b = h.blow_up(&[2, 1, 1]).unwrap();
        assert_eq!(b.vertex_count(), 4);
        assert_eq!(b.edge_count(), 2);
        assert!(b.has_edge(VertexSet::from_vertices(&[1, 3, 4]).unwrap()));
        assert!(b.has_edge(VertexSet::from_vertices(&[2, 3, 4]).unwrap()));
    }

    #[test]
    fn blow_up_identity_and_errors() {
        let h = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![2, 4, 5]]).unwrap();
        let b = h.blow_up(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(b, h);
        assert!(matches!(
            h.blow_up(&[1, 0, 1, 1, 1]),
            Err(Error::ZeroMultiplicity(2))
        ));
        assert!(matches!(
            h.blow_up(&[1, 1]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn contains_copy_basics() {
        let h = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        assert!(h.contains_copy(&h).unwrap());
        let single = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        let map = h.find_copy_of(&single).unwrap().unwrap();
        assert!(verify_embedding(&h, &single, &map));
        assert!(!single.contains_copy(&h).unwrap());
        let edgeless = Hypergraph::empty(4, 3).unwrap();
        assert!(h.contains_copy(&edgeless).unwrap());
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let a = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![1, 4, 5]]).unwrap();
        let b = Hypergraph::new(5, 3, &[vec![5, 4, 3], vec![1, 2, 5]]).unwrap();
        assert!(a.is_isomorphic_to(&b));
        let c = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        // `a` has a degree-2 vertex in both edges; `c` shares only vertex 3
        assert!(a.is_isomorphic_to(&c)); // same degree sequence {2,1,1,1,1}, and in fact isomorphic
        let d = Hypergraph::new(5, 3, &[vec![1, 2, 3]]).unwrap();
        assert!(!a.is_isomorphic_to(&d));
    }

    #[test]
    fn vertex_set_display() {
        let s = VertexSet::from_vertices(&[3, 1, 7]).unwrap();
        assert_eq!(s.to_string(), "{1,3,7}");
        assert_eq!(s.card(), 3);
        assert!(s.contains(7));
        assert!(!s.contains(2));
    }
}
