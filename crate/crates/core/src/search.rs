//! Exact extremal searches at small n: the minimum edge count subject to the
//! (q,p) covering property, and the maximum edge count avoiding forbidden
//! sub-hypergraphs. Both are depth-first branch and bound over the colex
//! sequence of possible edges, deterministic and single-threaded, with a
//! node budget for honest partial results.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::combin::{self, binomial, colex_rank};
use crate::error::{Error, Result};
use crate::hypergraph::{self, Hypergraph};
use crate::invariants::{has_property, PropertyPair};

/// Searches refuse universes larger than this many candidate edges; the
/// search is exponential in the universe, so bigger inputs are hopeless
/// anyway.
const UNIVERSE_LIMIT: u64 = 100_000;

/// An extremal value with its witness and optimality certificate metadata.
/// When `proved_optimal` is false the value is only the best incumbent found
/// before the node budget ran out.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub value: u64,
    pub witness: Hypergraph,
    pub nodes_explored: u64,
    pub proved_optimal: bool,
    pub elapsed: Duration,
}

/// One entry of a density sequence.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct DensityPoint {
    pub n: u32,
    pub value: u64,
    pub density: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneDirection {
    Nondecreasing,
    Nonincreasing,
}

#[derive(Clone, Debug)]
pub struct DensitySequence {
    pub points: Vec<DensityPoint>,
    pub direction: MonotoneDirection,
}

/// Minimum number of edges of an n-vertex r-uniform hypergraph in which
/// every q-subset of the vertices spans a p-clique. Exact when
/// `proved_optimal`; the complete hypergraph always qualifies, so a witness
/// always exists.
pub fn min_edges_with_property(
    n: u32,
    r: u32,
    q: u32,
    p: u32,
    node_budget: u64,
) -> Result<SearchResult> {
    let start = Instant::now();
    let pp = PropertyPair::new(q, p)?;
    if q > n {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds vertex count {n}"
        )));
    }
    let universe = edge_universe(n, r)?;
    let m = universe.len();

    let qsets: Vec<u64> = combin::subsets(n, q).collect();
    // for each candidate edge, the q-sets geometrically containing it
    let mut qsets_with_edge: Vec<Vec<u32>> = vec![Vec::new(); m];
    for (qi, &qmask) in qsets.iter().enumerate() {
        for emask in combin::subsets_of(qmask, r) {
            qsets_with_edge[colex_rank(emask) as usize].push(qi as u32);
        }
    }
    let clique_edges_needed = binomial(p, r); // a p-clique spans this many edges

    struct Search<'a> {
        universe: &'a [u64],
        qsets: &'a [u64],
        qsets_with_edge: &'a [Vec<u32>],
        r: u32,
        p: u32,
        included: Vec<bool>, // by edge rank
        chosen: Vec<u64>,    // edge masks, include order
        covered: Vec<bool>,  // by q-set index
        uncovered: usize,
        avail: Vec<u64>, // non-excluded edges inside each q-set
        clique_edges_needed: u64,
        best_value: u64,
        best_edges: Vec<u64>,
        nodes: u64,
        budget: u64,
        aborted: bool,
    }

    impl Search<'_> {
        /// Does the partial edge set span a p-clique inside this q-set that
        /// uses the freshly included edge?
        fn covers_now(&self, qmask: u64, new_edge: u64) -> bool {
            covers_with(&self.included, qmask, new_edge, self.p, self.r)
        }

        fn dfs(&mut self, depth: usize, included_count: u64) {
            if self.aborted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.aborted = true;
                return;
            }
            if self.uncovered == 0 {
                if included_count < self.best_value {
                    self.best_value = included_count;
                    self.best_edges = self.chosen.clone();
                }
                return;
            }
            if depth == self.universe.len() {
                return;
            }
            // every as-yet-uncovered q-set needs another edge, and one edge
            // helps at most `max_cover` of them
            let max_cover = (depth..self.universe.len())
                .map(|e| {
                    self.qsets_with_edge[e]
                        .iter()
                        .filter(|&&qi| !self.covered[qi as usize])
                        .count()
                })
                .max()
                .unwrap_or(0);
            if max_cover == 0 {
                return; // uncovered q-sets out of reach
            }
            let need = (self.uncovered as u64).div_ceil(max_cover as u64);
            if included_count + need >= self.best_value {
                return;
            }

            let e = depth;
            let emask = self.universe[e];

            // include branch
            self.included[e] = true;
            self.chosen.push(emask);
            let mut newly = Vec::new();
            for &qi in &self.qsets_with_edge[e] {
                let qi = qi as usize;
                if !self.covered[qi] && self.covers_now(self.qsets[qi], emask) {
                    self.covered[qi] = true;
                    self.uncovered -= 1;
                    newly.push(qi);
                }
            }
            self.dfs(depth + 1, included_count + 1);
            for qi in newly {
                self.covered[qi] = false;
                self.uncovered += 1;
            }
            self.chosen.pop();
            self.included[e] = false;

            // exclude branch
            let mut dead = false;
            for &qi in &self.qsets_with_edge[e] {
                let qi = qi as usize;
                self.avail[qi] -= 1;
                if !self.covered[qi] && self.avail[qi] < self.clique_edges_needed {
                    dead = true;
                }
            }
            if !dead {
                self.dfs(depth + 1, included_count);
            }
            for &qi in &self.qsets_with_edge[e] {
                self.avail[qi as usize] += 1;
            }
        }
    }

    let initially_covered = p < r; // vacuous cliques cover everything

    // Greedy incumbent: repeatedly include the lowest-rank edge lying in the
    // most still-uncovered q-sets. Without a decent starting incumbent the
    // counting bound barely prunes.
    let mut greedy_included = vec![false; m];
    let mut greedy_covered = vec![initially_covered; qsets.len()];
    let mut greedy_uncovered = if initially_covered { 0 } else { qsets.len() };
    let mut greedy_edges: Vec<u64> = Vec::new();
    while greedy_uncovered > 0 {
        let mut pick = usize::MAX;
        let mut pick_score = 0usize;
        for e in 0..m {
            if greedy_included[e] {
                continue;
            }
            let score = qsets_with_edge[e]
                .iter()
                .filter(|&&qi| !greedy_covered[qi as usize])
                .count();
            if score > pick_score {
                pick_score = score;
                pick = e;
            }
        }
        if pick == usize::MAX {
            // all edges of every uncovered q-set already included; with the
            // complete graph everything is covered, so this cannot happen
            break;
        }
        greedy_included[pick] = true;
        greedy_edges.push(universe[pick]);
        for &qi in &qsets_with_edge[pick] {
            let qi = qi as usize;
            if !greedy_covered[qi] && covers_with(&greedy_included, qsets[qi], universe[pick], p, r)
            {
                greedy_covered[qi] = true;
                greedy_uncovered -= 1;
            }
        }
    }
    greedy_edges.sort_unstable();

    let mut search = Search {
        universe: &universe,
        qsets: &qsets,
        qsets_with_edge: &qsets_with_edge,
        r,
        p,
        included: vec![false; m],
        chosen: Vec::new(),
        covered: vec![initially_covered; qsets.len()],
        uncovered: if initially_covered { 0 } else { qsets.len() },
        avail: vec![binomial(q, r); qsets.len()],
        clique_edges_needed,
        best_value: greedy_edges.len() as u64,
        best_edges: greedy_edges,
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    search.dfs(0, 0);

    let witness = Hypergraph::from_edge_sets(
        n,
        r,
        search
            .best_edges
            .iter()
            .map(|&e| hypergraph::VertexSet::from_mask(e)),
    )?;
    if !has_property(&witness, pp)?.holds() {
        return Err(Error::InvariantViolation(
            "search produced a witness without the required property".into(),
        ));
    }
    Ok(SearchResult {
        value: search.best_value,
        witness,
        nodes_explored: search.nodes,
        proved_optimal: !search.aborted,
        elapsed: start.elapsed(),
    })
}

/// Maximum number of edges of an n-vertex hypergraph containing no copy of
/// any pattern. An optional warm-start witness seeds the incumbent (useful
/// for budget-capped runs); it must itself be pattern-free.
pub fn max_edges_avoiding(
    n: u32,
    patterns: &[Hypergraph],
    node_budget: u64,
    warm_start: Option<&Hypergraph>,
) -> Result<SearchResult> {
    run_max_search(n, patterns, node_budget, warm_start, false)
}

/// How the avoidance search detects pattern copies. At desk scale every
/// copy of every pattern inside K_n is tabulated up front as a set of edge
/// ranks and feasibility is a counter update; when the injection count is
/// out of range, each inclusion instead runs anchored embedding searches.
enum CopyChecker {
    Table {
        by_rank: Vec<Vec<u32>>, // constraint ids per edge rank
        missing: Vec<u32>,      // per constraint: edges not yet included
    },
    Anchored {
        plans: Vec<AnchorPlan>,
        orientations: Vec<Vec<usize>>,
        included: HashSet<u64>,
        scratch: Vec<u32>,
        n: u32,
    },
}

// An anchoring plan per (pattern, pattern edge): any copy created by a new
// edge must map some pattern edge onto it.
struct AnchorPlan {
    pat_n: u32,
    anchor: Vec<u32>, // pattern labels of the anchored edge
    plan: hypergraph::EmbedPlan,
}

impl CopyChecker {
    fn build(patterns: &[Hypergraph], n: u32, r: u32, force_anchored: bool) -> CopyChecker {
        if !force_anchored {
            if let Some(constraints) = enumerate_copy_constraints(patterns, n) {
                let m = binomial(n, r) as usize;
                let mut by_rank: Vec<Vec<u32>> = vec![Vec::new(); m];
                let mut missing = Vec::with_capacity(constraints.len());
                for (ci, cons) in constraints.iter().enumerate() {
                    for &rank in cons {
                        by_rank[rank as usize].push(ci as u32);
                    }
                    missing.push(cons.len() as u32);
                }
                return CopyChecker::Table { by_rank, missing };
            }
        }
        let mut plans = Vec::new();
        let mut max_pat_n = 0;
        for pattern in patterns {
            max_pat_n = max_pat_n.max(pattern.vertex_count());
            for pedge in pattern.edges() {
                plans.push(AnchorPlan {
                    pat_n: pattern.vertex_count(),
                    anchor: pedge.to_vec(),
                    plan: hypergraph::EmbedPlan::new(pattern, pedge.mask()),
                });
            }
        }
        CopyChecker::Anchored {
            plans,
            orientations: permutations(r as usize),
            included: HashSet::new(),
            scratch: vec![0u32; max_pat_n as usize],
            n,
        }
    }

    /// If including this edge keeps the set copy-free, record the inclusion
    /// and return true; otherwise change nothing.
    fn try_include(&mut self, rank: usize, emask: u64) -> bool {
        match self {
            CopyChecker::Table { by_rank, missing } => {
                if by_rank[rank].iter().any(|&ci| missing[ci as usize] == 1) {
                    return false; // this edge would complete a copy
                }
                for &ci in &by_rank[rank] {
                    missing[ci as usize] -= 1;
                }
                true
            }
            CopyChecker::Anchored {
                plans,
                orientations,
                included,
                scratch,
                n,
            } => {
                let host_edge = |m: u64| m == emask || included.contains(&m);
                let everts = combin::bit_positions(emask);
                for ap in plans.iter() {
                    if ap.pat_n > *n {
                        continue;
                    }
                    let map = &mut scratch[..ap.pat_n as usize];
                    for perm in orientations.iter() {
                        map.fill(0);
                        let mut used = 0u64;
                        for (i, &pi) in perm.iter().enumerate() {
                            map[ap.anchor[pi] as usize - 1] = everts[i] + 1;
                            used |= 1u64 << everts[i];
                        }
                        if ap.plan.run(*n, &host_edge, None, map, used) {
                            return false;
                        }
                    }
                }
                included.insert(emask);
                true
            }
        }
    }

    fn undo_include(&mut self, rank: usize, emask: u64) {
        match self {
            CopyChecker::Table { by_rank, missing } => {
                for &ci in &by_rank[rank] {
                    missing[ci as usize] += 1;
                }
            }
            CopyChecker::Anchored { included, .. } => {
                included.remove(&emask);
            }
        }
    }
}

/// Every copy of every pattern inside K_n, as colex-sorted rank sets,
/// deduplicated and deterministically ordered; `None` when the injection
/// count exceeds desk scale.
fn enumerate_copy_constraints(patterns: &[Hypergraph], n: u32) -> Option<Vec<Vec<u32>>> {
    const INJECTION_CAP: u64 = 2_000_000;
    let mut total = 0u64;
    for p in patterns {
        if p.vertex_count() > n {
            continue;
        }
        let mut injections = 1u64;
        for i in 0..p.vertex_count() {
            injections = injections.saturating_mul((n - i) as u64);
        }
        total = total.saturating_add(injections);
    }
    if total > INJECTION_CAP {
        return None;
    }

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for p in patterns {
        if p.vertex_count() > n {
            continue;
        }
        let pat_n = p.vertex_count() as usize;
        let mut map = vec![0u32; pat_n];

        fn rec(
            p: &Hypergraph,
            n: u32,
            depth: usize,
            map: &mut [u32],
            used: u64,
            seen: &mut HashSet<Vec<u32>>,
        ) {
            if depth == map.len() {
                let mut ranks: Vec<u32> = p
                    .edges()
                    .map(|e| {
                        let mut m = 0u64;
                        for pv in e.vertices() {
                            m |= 1u64 << (map[pv as usize - 1] - 1);
                        }
                        colex_rank(m) as u32
                    })
                    .collect();
                ranks.sort_unstable();
                seen.insert(ranks);
                return;
            }
            for hv in 1..=n {
                if used >> (hv - 1) & 1 == 0 {
                    map[depth] = hv;
                    rec(p, n, depth + 1, map, used | 1u64 << (hv - 1), seen);
                }
            }
        }
        rec(p, n, 0, &mut map, 0, &mut seen);
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

pub(crate) fn run_max_search(
    n: u32,
    patterns: &[Hypergraph],
    node_budget: u64,
    warm_start: Option<&Hypergraph>,
    force_anchored: bool,
) -> Result<SearchResult> {
    let start = Instant::now();
    if patterns.is_empty() {
        return Err(Error::InvalidParameter(
            "need at least one forbidden pattern".into(),
        ));
    }
    let r = patterns[0].uniformity();
    for p in patterns {
        if p.uniformity() != r {
            return Err(Error::UniformityMismatch {
                left: r,
                right: p.uniformity(),
            });
        }
        if p.edge_count() == 0 && p.vertex_count() <= n {
            return Err(Error::InvalidParameter(
                "an edgeless pattern is contained in every hypergraph".into(),
            ));
        }
    }
    let universe = edge_universe(n, r)?;

    let mut best_value = 0u64;
    let mut best_edges: Vec<u64> = Vec::new();
    if let Some(w) = warm_start {
        if w.vertex_count() != n || w.uniformity() != r {
            return Err(Error::InvalidParameter(
                "warm start must live on the same vertex set and uniformity".into(),
            ));
        }
        for p in patterns {
            if w.contains_copy(p)? {
                return Err(Error::InvalidParameter(
                    "warm start contains a forbidden pattern".into(),
                ));
            }
        }
        best_value = w.edge_count();
        best_edges = w.edges().map(|e| e.mask()).collect();
    }

    let checker = CopyChecker::build(patterns, n, r, force_anchored);

    struct Search<'a> {
        universe: &'a [u64],
        checker: CopyChecker,
        chosen: Vec<u64>,
        best_value: u64,
        best_edges: Vec<u64>,
        nodes: u64,
        budget: u64,
        aborted: bool,
    }

    impl Search<'_> {
        fn dfs(&mut self, depth: usize, included_count: u64) {
            if self.aborted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.aborted = true;
                return;
            }
            let remaining = (self.universe.len() - depth) as u64;
            if included_count + remaining <= self.best_value {
                return;
            }
            if depth == self.universe.len() {
                // strictly better than the incumbent by the bound above
                self.best_value = included_count;
                self.best_edges = self.chosen.clone();
                return;
            }
            let emask = self.universe[depth];
            if self.checker.try_include(depth, emask) {
                self.chosen.push(emask);
                self.dfs(depth + 1, included_count + 1);
                self.chosen.pop();
                self.checker.undo_include(depth, emask);
            }
            self.dfs(depth + 1, included_count);
        }
    }

    let mut search = Search {
        universe: &universe,
        checker,
        chosen: Vec::new(),
        best_value,
        best_edges,
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    search.dfs(0, 0);

    let mut masks = search.best_edges;
    masks.sort_unstable();
    let witness = Hypergraph::from_edge_sets(
        n,
        r,
        masks.iter().map(|&e| hypergraph::VertexSet::from_mask(e)),
    )?;
    for p in patterns {
        if witness.contains_copy(p)? {
            return Err(Error::InvariantViolation(
                "search produced a witness containing a forbidden pattern".into(),
            ));
        }
    }
    Ok(SearchResult {
        value: search.best_value,
        witness,
        nodes_explored: search.nodes,
        proved_optimal: !search.aborted,
        elapsed: start.elapsed(),
    })
}

/// Does `included` span a p-clique inside the q-set that uses `new_edge`?
/// Coverage is maintained eagerly, so a clique that appeared on an include
/// must contain the included edge.
fn covers_with(included: &[bool], qmask: u64, new_edge: u64, p: u32, r: u32) -> bool {
    if p < r {
        return true;
    }
    for extra in combin::subsets_of(qmask & !new_edge, p - r) {
        let y = extra | new_edge;
        if combin::subsets_of(y, r).all(|e| included[colex_rank(e) as usize]) {
            return true;
        }
    }
    false
}

// All permutations of 0..k, for anchoring a pattern edge in every
// orientation.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    rec(&mut items, 0, &mut out);
    out
}

fn edge_universe(n: u32, r: u32) -> Result<Vec<u64>> {
    if r < 2 || r > n || n > combin::MAX_VERTICES {
        return Err(Error::BadDimensions { n, r });
    }
    let m = binomial(n, r);
    if m > UNIVERSE_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "search universe C({n},{r}) = {m} exceeds the limit {UNIVERSE_LIMIT}"
        )));
    }
    Ok(combin::subsets(n, r).collect())
}

/// What a density sequence should be computed over.
pub enum DensityKind<'a> {
    MinProperty { r: u32, q: u32, p: u32 },
    MaxAvoiding { patterns: &'a [Hypergraph] },
}

/// Exact densities value/C(n,r) over a range of n, verified monotone:
/// nondecreasing for the covering minimum, nonincreasing for the avoidance
/// maximum. Every point must be proved optimal within the per-point budget;
/// a monotonicity violation would indicate a search bug and is a hard error.
pub fn density_sequence(
    kind: &DensityKind<'_>,
    n_range: std::ops::RangeInclusive<u32>,
    node_budget_per_point: u64,
) -> Result<DensitySequence> {
    let mut points = Vec::new();
    let direction = match kind {
        DensityKind::MinProperty { .. } => MonotoneDirection::Nondecreasing,
        DensityKind::MaxAvoiding { .. } => MonotoneDirection::Nonincreasing,
    };
    for n in n_range {
        let (result, r) = match kind {
            DensityKind::MinProperty { r, q, p } => (
                min_edges_with_property(n, *r, *q, *p, node_budget_per_point)?,
                *r,
            ),
            DensityKind::MaxAvoiding { patterns } => (
                max_edges_avoiding(n, patterns, node_budget_per_point, None)?,
                patterns[0].uniformity(),
            ),
        };
        if !result.proved_optimal {
            return Err(Error::InexactDensityPoint { n });
        }
        points.push(DensityPoint {
            n,
            value: result.value,
            density: result.value as f64 / binomial(n, r) as f64,
        });
    }
    for pair in points.windows(2) {
        let ok = match direction {
            MonotoneDirection::Nondecreasing => pair[0].density <= pair[1].density,
            MonotoneDirection::Nonincreasing => pair[0].density >= pair[1].density,
        };
        if !ok {
            return Err(Error::MonotonicityViolation {
                left: pair[0].n,
                right: pair[1].n,
                left_density: pair[0].density,
                right_density: pair[1].density,
            });
        }
    }
    Ok(DensitySequence { points, direction })
}

/// The covering property computed through the complementary route: F has
/// property (q,p) iff inside every q-set the complement's independence
/// number is at least p. Cross-checks [`has_property`].
pub fn property_via_complement(
    h: &Hypergraph,
    pp: PropertyPair,
) -> Result<crate::invariants::PropertyVerdict> {
    use crate::invariants::PropertyVerdict;
    let n = h.vertex_count();
    if pp.q() > n {
        return Err(Error::InvalidParameter(format!(
            "q={} exceeds vertex count {n}",
            pp.q()
        )));
    }
    if pp.q() < h.uniformity() {
        // no r-set fits inside a q-set, so alpha = q >= p on every q-set
        return Ok(PropertyVerdict::Holds);
    }
    let comp = h.complement();
    for qmask in combin::subsets(n, pp.q()) {
        let qset = hypergraph::VertexSet::from_mask(qmask);
        let sub = comp.induced(qset)?;
        let (alpha, _) = crate::invariants::independence_number(&sub);
        if alpha < pp.p() {
            return Ok(PropertyVerdict::Fails(qset));
        }
    }
    Ok(PropertyVerdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{balanced_union, catalog};

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn single_edge_suffices_when_q_is_n() {
        let res = min_edges_with_property(5, 3, 5, 3, BUDGET).unwrap();
        assert_eq!(res.value, 1);
        assert!(res.proved_optimal);
    }

    #[test]
    fn vacuous_property_needs_no_edges() {
        let res = min_edges_with_property(5, 3, 4, 2, BUDGET).unwrap();
        assert_eq!(res.value, 0);
    }

    #[test]
    fn avoiding_single_edge_pattern() {
        let single = Hypergraph::complete(3, 3).unwrap();
        let res = max_edges_avoiding(6, &[single], BUDGET, None).unwrap();
        assert_eq!(res.value, 0);
        assert!(res.proved_optimal);
    }

    #[test]
    fn budget_zero_reports_unproved() {
        // the greedy warm start still yields a valid (unproved) incumbent
        let res = min_edges_with_property(5, 3, 4, 3, 0).unwrap();
        assert!(!res.proved_optimal);
        assert_eq!(res.value, res.witness.edge_count());
        assert!(has_property(&res.witness, PropertyPair::new(4, 3).unwrap())
            .unwrap()
            .holds());
        let k4 = catalog("K4").unwrap();
        let res = max_edges_avoiding(5, &[k4], 0, None).unwrap();
        assert!(!res.proved_optimal);
        assert_eq!(res.value, 0); // empty incumbent
    }

    #[test]
    fn warm_start_is_validated_and_kept() {
        let k4 = catalog("K4").unwrap();
        let warm = balanced_union(6, 3, 2).unwrap(); // K_4^3-free, 2 edges
        let res = max_edges_avoiding(6, std::slice::from_ref(&k4), 0, Some(&warm)).unwrap();
        assert_eq!(res.value, 2);
        assert!(!res.proved_optimal);
        let bad = Hypergraph::complete(6, 3).unwrap();
        assert!(max_edges_avoiding(6, &[k4], 10, Some(&bad)).is_err());
    }

    #[test]
    fn duality_at_n5() {
        let min = min_edges_with_property(5, 3, 4, 3, BUDGET).unwrap();
        let max = max_edges_avoiding(5, &[catalog("K4").unwrap()], BUDGET, None).unwrap();
        assert!(min.proved_optimal && max.proved_optimal);
        assert_eq!(min.value, 3);
        assert_eq!(max.value, 7);
        assert_eq!(min.value + max.value, binomial(5, 3));
    }

    #[test]
    fn graph_case_matches_turan_complement() {
        let res = min_edges_with_property(6, 2, 3, 2, BUDGET).unwrap();
        assert_eq!(res.value, 6);
        assert!(res.proved_optimal);
    }

    #[test]
    fn complement_route_agrees() {
        let h8 = balanced_union(8, 3, 2).unwrap();
        let pp = PropertyPair::new(5, 3).unwrap();
        assert_eq!(
            property_via_complement(&h8, pp).unwrap(),
            has_property(&h8, pp).unwrap()
        );
        let empty = Hypergraph::empty(7, 3).unwrap();
        let pp = PropertyPair::new(5, 3).unwrap();
        assert_eq!(
            property_via_complement(&empty, pp).unwrap(),
            has_property(&empty, pp).unwrap()
        );
    }

    #[test]
    fn copy_checker_paths_agree() {
        let k4 = catalog("K4").unwrap();
        let tabled = run_max_search(5, std::slice::from_ref(&k4), BUDGET, None, false).unwrap();
        let anchored = run_max_search(5, &[k4], BUDGET, None, true).unwrap();
        assert_eq!(tabled.value, anchored.value);
        assert_eq!(tabled.witness, anchored.witness);
        // both checkers answer identically, so budget-capped runs walk the
        // same tree and stop on the same incumbent
        let r1 = catalog("R1").unwrap();
        let tabled = run_max_search(7, std::slice::from_ref(&r1), 5_000, None, false).unwrap();
        let anchored = run_max_search(7, &[r1], 5_000, None, true).unwrap();
        assert_eq!(tabled.nodes_explored, anchored.nodes_explored);
        assert_eq!(tabled.value, anchored.value);
        assert_eq!(tabled.witness, anchored.witness);
    }

    #[test]
    fn single_point_sequence_is_monotone() {
        let seq = density_sequence(
            &DensityKind::MinProperty { r: 3, q: 5, p: 3 },
            5..=5,
            BUDGET,
        )
        .unwrap();
        assert_eq!(seq.points.len(), 1);
        assert_eq!(seq.points[0].value, 1);
    }
}
