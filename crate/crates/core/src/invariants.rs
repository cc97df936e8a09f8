//! Independence and clique numbers, the (q,p) covering property, holes, and
//! the hereditary edge-count bound.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combin::{self, binomial};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// A pair (q, p): every q vertices must span a clique on p of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyPair {
    q: u32,
    p: u32,
}

impl PropertyPair {
    pub fn new(q: u32, p: u32) -> Result<Self> {
        if p == 0 || q < p {
            return Err(Error::InvalidParameter(format!(
                "property pair needs q >= p >= 1, got ({q},{p})"
            )));
        }
        Ok(PropertyPair { q, p })
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn p(self) -> u32 {
        self.p
    }
}

/// Result of a property check; on failure carries the violating q-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyVerdict {
    Holds,
    Fails(VertexSet),
}

impl PropertyVerdict {
    pub fn holds(self) -> bool {
        matches!(self, PropertyVerdict::Holds)
    }

    pub fn counterexample(self) -> Option<VertexSet> {
        match self {
            PropertyVerdict::Holds => None,
            PropertyVerdict::Fails(s) => Some(s),
        }
    }
}

/// A witness that `set` spans few cliques: `|set| = width`, the induced
/// clique number is `clique`, and `width > divisor * clique`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoleDescriptor {
    pub set: VertexSet,
    pub width: u32,
    pub clique: u32,
    pub divisor: u32,
}

/// Decomposition of a subset size s as (a-b)t + b(t-1) with 0 <= b < a.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HereditaryParams {
    pub parts: u32,
    pub subset_size: u32,
    pub block_size: u32,
    pub short_blocks: u32,
}

impl HereditaryParams {
    /// Decompose `subset_size` for the given number of parts; the block size
    /// is `ceil(s/a)` and `short_blocks` many blocks lose one element.
    pub fn decompose(parts: u32, subset_size: u32) -> Result<Self> {
        if parts == 0 || subset_size == 0 {
            return Err(Error::InvalidParameter(
                "hereditary decomposition needs parts >= 1 and subset size >= 1".into(),
            ));
        }
        let block_size = subset_size.div_ceil(parts);
        let short_blocks = parts * block_size - subset_size;
        debug_assert!(short_blocks < parts);
        debug_assert_eq!(
            (parts - short_blocks) * block_size + short_blocks * (block_size - 1),
            subset_size
        );
        Ok(HereditaryParams {
            parts,
            subset_size,
            block_size,
            short_blocks,
        })
    }
}

/// Largest vertex set spanning no edge, with one witness. The witness is the
/// first maximum found in a fixed depth-first order, so it is deterministic.
pub fn independence_number(h: &Hypergraph) -> (u32, VertexSet) {
    let (k, mask) = independence_number_within(h, h.vertex_set().mask());
    (k, VertexSet::from_mask(mask))
}

/// Largest clique (a set all of whose r-subsets are edges), with witness.
/// Sets smaller than r are vacuous cliques, so the result is at least
/// min(n, r-1).
pub fn clique_number(h: &Hypergraph) -> (u32, VertexSet) {
    let (k, mask) = clique_number_within(h, h.vertex_set().mask(), None);
    (k, VertexSet::from_mask(mask))
}

pub(crate) fn independence_number_within(h: &Hypergraph, within: u64) -> (u32, u64) {
    let verts = combin::bit_positions(within);
    // edges fully inside the window, grouped by a member vertex for the
    // incremental blocked-check
    let mut incident: Vec<Vec<u64>> = vec![Vec::new(); 65];
    for &e in h.edge_masks() {
        if e & !within == 0 {
            for p in combin::bit_positions(e) {
                incident[p as usize].push(e);
            }
        }
    }

    struct Ctx<'a> {
        verts: &'a [u32],
        incident: &'a [Vec<u64>],
        best: u32,
        best_set: u64,
    }

    fn rec(ctx: &mut Ctx<'_>, idx: usize, set: u64, count: u32) {
        if count > ctx.best {
            ctx.best = count;
            ctx.best_set = set;
        }
        if idx == ctx.verts.len() || count + (ctx.verts.len() - idx) as u32 <= ctx.best {
            return;
        }
        let p = ctx.verts[idx];
        let with = set | 1u64 << p;
        if ctx.incident[p as usize].iter().all(|&e| e & !with != 0) {
            rec(ctx, idx + 1, with, count + 1);
        }
        rec(ctx, idx + 1, set, count);
    }

    let mut ctx = Ctx {
        verts: &verts,
        incident: &incident,
        best: 0,
        best_set: 0,
    };
    rec(&mut ctx, 0, 0, 0);
    (ctx.best, ctx.best_set)
}

/// Clique number restricted to the vertices of `within`. With
/// `stop_at = Some(t)` the search may return early once a clique of size
/// `t` or larger is found (the returned size is then exactly `t`); when the
/// true clique number is below `t` the result is exact.
pub(crate) fn clique_number_within(
    h: &Hypergraph,
    within: u64,
    stop_at: Option<u32>,
) -> (u32, u64) {
    let verts = combin::bit_positions(within);
    let r = h.uniformity();
    let vacuous = (verts.len() as u32).min(r - 1);
    let mut base = 0u64;
    for &p in verts.iter().take(vacuous as usize) {
        base |= 1u64 << p;
    }
    if let Some(t) = stop_at {
        if vacuous >= t {
            return (t, base);
        }
    }

    struct Ctx<'a> {
        h: &'a Hypergraph,
        verts: &'a [u32],
        r: u32,
        best: u32,
        best_set: u64,
        stop_at: Option<u32>,
        done: bool,
    }

    fn extends(h: &Hypergraph, r: u32, clique: u64, count: u32, p: u32) -> bool {
        if count + 1 < r {
            return true;
        }
        let vbit = 1u64 << p;
        combin::subsets_of(clique, r - 1).all(|t| h.has_edge_mask(t | vbit))
    }

    fn rec(ctx: &mut Ctx<'_>, idx: usize, clique: u64, count: u32) {
        if ctx.done {
            return;
        }
        if count > ctx.best {
            ctx.best = count;
            ctx.best_set = clique;
            if let Some(t) = ctx.stop_at {
                if count >= t {
                    ctx.done = true;
                    return;
                }
            }
        }
        if idx == ctx.verts.len() || count + (ctx.verts.len() - idx) as u32 <= ctx.best {
            return;
        }
        let p = ctx.verts[idx];
        if extends(ctx.h, ctx.r, clique, count, p) {
            rec(ctx, idx + 1, clique | 1u64 << p, count + 1);
        }
        rec(ctx, idx + 1, clique, count);
    }

    let mut ctx = Ctx {
        h,
        verts: &verts,
        r,
        best: vacuous,
        best_set: base,
        stop_at,
        done: false,
    };
    rec(&mut ctx, 0, 0, 0);
    (ctx.best, ctx.best_set)
}

/// Does every q-subset of the vertices induce a sub-hypergraph with clique
/// number at least p? Enumerates q-sets in colex order and stops at the
/// first violation, so the counterexample is the colex-least one.
pub fn has_property(h: &Hypergraph, pp: PropertyPair) -> Result<PropertyVerdict> {
    let n = h.vertex_count();
    if pp.q > n {
        return Err(Error::InvalidParameter(format!(
            "q={} exceeds vertex count {n}",
            pp.q
        )));
    }
    if pp.p < h.uniformity() {
        return Ok(PropertyVerdict::Holds); // vacuous cliques suffice
    }
    for qmask in combin::subsets(n, pp.q) {
        let (omega, _) = clique_number_within(h, qmask, Some(pp.p));
        if omega < pp.p {
            return Ok(PropertyVerdict::Fails(VertexSet::from_mask(qmask)));
        }
    }
    Ok(PropertyVerdict::Holds)
}

/// Minimum-width hole with width at most `max_width` (clamped to n), ties
/// broken by colex-least vertex set; `None` if the graph has no such hole.
pub fn find_hole(h: &Hypergraph, divisor: u32, max_width: u32) -> Result<Option<HoleDescriptor>> {
    if !(2..=64).contains(&divisor) {
        return Err(Error::InvalidParameter(format!(
            "hole divisor must be in 2..=64, got {divisor}"
        )));
    }
    let n = h.vertex_count();
    let r = h.uniformity();
    // a set of size w <= a*(r-1) has clique number >= w/a vacuously
    let start = divisor * (r - 1) + 1;
    for w in start..=max_width.min(n) {
        // hole iff clique number <= floor((w-1)/a)
        let cap = (w - 1) / divisor;
        for zmask in combin::subsets(n, w) {
            let (omega, _) = clique_number_within(h, zmask, Some(cap + 1));
            if omega <= cap {
                return Ok(Some(HoleDescriptor {
                    set: VertexSet::from_mask(zmask),
                    width: w,
                    clique: omega,
                    divisor,
                }));
            }
        }
    }
    Ok(None)
}

/// The excess a*p - q of a pair (q, p).
pub fn excess(q: u32, p: u32, divisor: u32) -> i64 {
    divisor as i64 * p as i64 - q as i64
}

/// Lower bound (a-b)C(t,r) + bC(t-1,r) for the edges inside a subset whose
/// size decomposes per `params`.
pub fn hereditary_bound(params: &HereditaryParams, r: u32) -> u64 {
    let t = params.block_size;
    let long = (params.parts - params.short_blocks) as u64;
    let short = params.short_blocks as u64;
    long * binomial(t, r) + short * binomial(t.saturating_sub(1), r)
}

/// Per-size outcome of [`check_hereditary`].
#[derive(Clone, Debug)]
pub struct HereditaryRow {
    pub subset_size: u32,
    pub block_size: u32,
    pub short_blocks: u32,
    pub bound: u64,
    pub min_edges: u64,
    pub slack: i64,
    pub witness: VertexSet,
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct HereditaryReport {
    pub rows: Vec<HereditaryRow>,
    pub min_slack: i64,
    pub fully_exhaustive: bool,
}

#[derive(Clone, Debug)]
pub enum HereditaryOutcome {
    /// Precondition failed: the graph still has a small hole.
    HoleFound(HoleDescriptor),
    Report(HereditaryReport),
}

const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
const SAMPLE_COUNT: usize = 10_000;

/// Verify the hereditary edge bound for every subset size
/// `s in [(r-1)a, a*block]`: each size is checked against all subsets when
/// C(n,s) <= 10^6 and against 10^4 seeded uniform samples otherwise.
pub fn check_hereditary(
    h: &Hypergraph,
    divisor: u32,
    block: u32,
    seed: u64,
) -> Result<HereditaryOutcome> {
    let n = h.vertex_count();
    let r = h.uniformity();
    if block < r {
        return Err(Error::InvalidParameter(format!(
            "block size must be at least the uniformity {r}, got {block}"
        )));
    }
    let top = divisor.saturating_mul(block).min(n);
    if let Some(hole) = find_hole(h, divisor, top)? {
        return Ok(HereditaryOutcome::HoleFound(hole));
    }
    let edges = h.edge_masks();
    let count_inside = |ymask: u64| edges.iter().filter(|&&e| e & !ymask == 0).count() as u64;

    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in (r - 1) * divisor..=top {
        let params = HereditaryParams::decompose(divisor, s)?;
        let bound = hereditary_bound(&params, r);
        let total = binomial(n, s);
        let exhaustive = total <= EXHAUSTIVE_LIMIT;
        let (min_edges, witness) = if exhaustive {
            let masks: Vec<u64> = combin::subsets(n, s).collect();
            masks
                .par_iter()
                .map(|&m| (count_inside(m), m))
                .min()
                .expect("at least one subset of each size")
        } else {
            let mut best = (u64::MAX, 0u64);
            for _ in 0..SAMPLE_COUNT {
                let picks = rand::seq::index::sample(&mut rng, n as usize, s as usize);
                let mut m = 0u64;
                for i in picks {
                    m |= 1u64 << i;
                }
                best = best.min((count_inside(m), m));
            }
            best
        };
        rows.push(HereditaryRow {
            subset_size: s,
            block_size: params.block_size,
            short_blocks: params.short_blocks,
            bound,
            min_edges,
            slack: min_edges as i64 - bound as i64,
            witness: VertexSet::from_mask(witness),
            exhaustive,
        });
    }
    let min_slack = rows.iter().map(|r| r.slack).min().unwrap_or(0);
    let fully_exhaustive = rows.iter().all(|r| r.exhaustive);
    Ok(HereditaryOutcome::Report(HereditaryReport {
        rows,
        min_slack,
        fully_exhaustive,
    }))
}
