//! The one-shot claim suite behind `verify-paper`: every desk-checkable
//! fact the library's objects are supposed to satisfy, evaluated with exact
//! equality and reported pass/fail/skipped.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use turan_core::combin::{binomial, subsets};
use turan_core::constructions::{balanced_union, catalog, crossing_construction, h1, h2, t_prime};
use turan_core::hypergraph::{verify_embedding, Hypergraph, VertexSet};
use turan_core::invariants::{
    check_hereditary, find_hole, has_property, independence_number, HereditaryOutcome, PropertyPair,
};
use turan_core::link::{
    build_link_multigraph, extract_r_copy, find_heavy_triple, heavy_triple_threshold,
};
use turan_core::removal::{run_hole_removal, RemovalParams};
use turan_core::search::{
    density_sequence, max_edges_avoiding, min_edges_with_property, property_via_complement,
    DensityKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

#[derive(Serialize)]
pub struct ClaimReport {
    pub id: &'static str,
    pub subject: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl ClaimReport {
    fn check(
        id: &'static str,
        subject: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        ClaimReport {
            id,
            subject: subject.into(),
            expected,
            computed,
            status,
        }
    }

    fn skipped(
        id: &'static str,
        subject: impl Into<String>,
        expected: impl ToString,
        why: &str,
    ) -> Self {
        ClaimReport {
            id,
            subject: subject.into(),
            expected: expected.to_string(),
            computed: format!("skipped: {why}"),
            status: Status::SkippedBudget,
        }
    }
}

pub(crate) fn alpha_claim(
    id: &'static str,
    name: &str,
    h: &Hypergraph,
    expected: u32,
) -> ClaimReport {
    let (alpha, witness) = independence_number(h);
    let computed = if alpha == expected {
        alpha.to_string()
    } else {
        format!("{alpha} (witness {witness})")
    };
    ClaimReport::check(id, format!("alpha({name})"), expected, computed)
}

/// Run the full suite. A node budget of zero skips every claim that needs a
/// branch-and-bound search; catalog and enumeration claims always run.
pub fn run_all(budget: u64, seed: u64) -> Vec<ClaimReport> {
    let mut out = Vec::new();

    // ---- tier 1: catalog and fixed constructions -------------------------
    let names = ["R0", "R1", "R2", "R", "T", "T_minus"];
    let counts: Vec<String> = names
        .iter()
        .map(|n| catalog(n).unwrap().edge_count().to_string())
        .collect();
    out.push(ClaimReport::check(
        "catalog-edge-counts",
        "edge counts of R0,R1,R2,R,T,T_minus",
        "16,13,13,15,15,14",
        counts.join(","),
    ));
    for name in ["R0", "R1", "R2", "R"] {
        let id = match name {
            "R0" => "alpha-r0",
            "R1" => "alpha-r1",
            "R2" => "alpha-r2",
            _ => "alpha-r",
        };
        out.push(alpha_claim(id, name, &catalog(name).unwrap(), 3));
    }
    out.push(alpha_claim("alpha-t-prime", "T'", &t_prime(), 4));

    for p in [3u32, 5, 7] {
        let h = h1(p).unwrap();
        out.push(ClaimReport::check(
            "h1-shape",
            format!("H1({p}): vertices, independence"),
            format!("{},{p}", 2 * p + 1),
            format!("{},{}", h.vertex_count(), independence_number(&h).0),
        ));
    }
    for p in [4u32, 6, 8] {
        let h = h2(p).unwrap();
        out.push(ClaimReport::check(
            "h2-shape",
            format!("H2({p}): vertices, independence"),
            format!("{},{p}", 2 * p + 1),
            format!("{},{}", h.vertex_count(), independence_number(&h).0),
        ));
    }

    // ---- tier 2: exhaustive enumeration ----------------------------------
    for a in [2u32, 3] {
        let mut bad = Vec::new();
        let mut checked = 0;
        for n in 6..=12u32 {
            let h = balanced_union(n, 3, a).unwrap();
            for p in 1.. {
                let q = a * p;
                if q > n {
                    break;
                }
                for (qq, pp) in [(q, p), (q + 1, p + 1)] {
                    if qq > n {
                        continue;
                    }
                    checked += 1;
                    let pair = PropertyPair::new(qq, pp).unwrap();
                    if !has_property(&h, pair).unwrap().holds() {
                        bad.push(format!("n={n} ({qq},{pp})"));
                    }
                }
            }
        }
        out.push(ClaimReport::check(
            if a == 2 {
                "balanced-2-properties"
            } else {
                "balanced-3-properties"
            },
            format!("balanced union a={a}: (ap,p) and (ap+1,p+1) for n=6..12"),
            format!("{checked} pairs hold"),
            if bad.is_empty() {
                format!("{checked} pairs hold")
            } else {
                format!("violations: {}", bad.join("; "))
            },
        ));
    }

    {
        let mut failures = Vec::new();
        for ell in [3u32, 4, 5] {
            let h = balanced_union(2 * ell, 3, 2).unwrap();
            if let Some(hole) = find_hole(&h, 2, 2 * ell).unwrap() {
                failures.push(format!("ell={ell}: hole {}", hole.set));
                continue;
            }
            match check_hereditary(&h, 2, ell, seed).unwrap() {
                HereditaryOutcome::HoleFound(hole) => {
                    failures.push(format!("ell={ell}: hole {}", hole.set))
                }
                HereditaryOutcome::Report(rep) => {
                    let full = rep.rows.iter().find(|r| r.subset_size == 2 * ell);
                    match full {
                        Some(row) if row.slack == 0 && row.min_edges == 2 * binomial(ell, 3) => {}
                        Some(row) => failures.push(format!(
                            "ell={ell}: slack {} edges {}",
                            row.slack, row.min_edges
                        )),
                        None => failures.push(format!("ell={ell}: missing full-set row")),
                    }
                }
            }
        }
        out.push(ClaimReport::check(
            "balanced-hole-free-hereditary",
            "balanced unions H_{2l,3,2}: hole-free, hereditary slack 0 at the full set (l=3,4,5)",
            "hole-free, slack 0",
            if failures.is_empty() {
                "hole-free, slack 0".to_string()
            } else {
                failures.join("; ")
            },
        ));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut disagreements = 0u32;
        let mut total = 0u32;
        let mut instances: Vec<(Hypergraph, u32, u32)> = Vec::new();
        for name in names {
            instances.push((catalog(name).unwrap(), 5, 3));
            instances.push((catalog(name).unwrap(), 4, 2));
        }
        instances.push((t_prime(), 5, 3));
        for _ in 0..200 {
            let n = rng.gen_range(4..=9);
            let density: f64 = *[0.2, 0.5, 0.8].choose(&mut rng).unwrap();
            let edges: Vec<VertexSet> = subsets(n, 3)
                .filter(|_| rng.gen_bool(density))
                .map(VertexSet::from_mask)
                .collect();
            let h = Hypergraph::from_edge_sets(n, 3, edges).unwrap();
            let q = rng.gen_range(3..=n);
            let p = rng.gen_range(1..=q.min(5));
            instances.push((h, q, p));
        }
        for (h, q, p) in &instances {
            total += 1;
            let pair = PropertyPair::new(*q, *p).unwrap();
            if has_property(h, pair).unwrap() != property_via_complement(h, pair).unwrap() {
                disagreements += 1;
            }
        }
        out.push(ClaimReport::check(
            "complement-duality",
            format!("clique route vs complement route on {total} instances"),
            "0 disagreements",
            format!("{disagreements} disagreements"),
        ));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = 0u32;
        let mut traces = 0u32;
        for _ in 0..50 {
            let n = rng.gen_range(11..=14u32);
            let p = n.div_ceil(2);
            let hole = rng.gen_range(5..=(n - p).max(5));
            let base = Hypergraph::empty(hole, 3)
                .unwrap()
                .disjoint_union(&Hypergraph::complete(n - hole, 3).unwrap())
                .unwrap();
            let mut edges: Vec<Vec<u32>> = base.edges().map(|e| e.to_vec()).collect();
            for _ in 0..rng.gen_range(0..=2) {
                let mut verts: Vec<u32> = (1..=n).collect();
                verts.shuffle(&mut rng);
                edges.push(verts[..3].to_vec());
            }
            let mut relabel: Vec<u32> = (1..=n).collect();
            relabel.shuffle(&mut rng);
            let shuffled: Vec<Vec<u32>> = edges
                .iter()
                .map(|e| e.iter().map(|&v| relabel[v as usize - 1]).collect())
                .collect();
            let h = Hypergraph::new(n, 3, &shuffled).unwrap();
            let params = RemovalParams {
                divisor: 2,
                q: n,
                p,
                block: 3,
            };
            // the engine re-proves the derived property at each step and errors on failure
            match run_hole_removal(&h, params, true) {
                Ok(trace) => {
                    traces += 1;
                    let mut excesses: Vec<i64> = trace.steps.iter().map(|s| s.excess).collect();
                    excesses.push(trace.terminal_excess);
                    if excesses.windows(2).any(|w| w[1] <= w[0]) {
                        bad += 1;
                    }
                }
                Err(_) => bad += 1,
            }
        }
        out.push(ClaimReport::check(
            "removal-traces",
            format!("{traces} planted-hole traces: excess strictly increasing, steps verified"),
            "0 violations",
            format!("{bad} violations"),
        ));
    }

    {
        let base = VertexSet::from_vertices(&[1, 2, 3, 4]).unwrap();
        for (id, name, weight) in [("link-r0", "R0", 12u32), ("link-r", "R", 11u32)] {
            let h = catalog(name).unwrap();
            let m = build_link_multigraph(&h, base).unwrap();
            let computed = match find_heavy_triple(&m, 11) {
                None => "no heavy triple".to_string(),
                Some(heavy) => {
                    let embedded = extract_r_copy(&h, base, heavy.set)
                        .map(|map| verify_embedding(&h, &catalog("R").unwrap(), &map))
                        .unwrap_or(false);
                    format!(
                        "{} weight {} embedding {}",
                        heavy.set,
                        heavy.weight,
                        if embedded { "verified" } else { "INVALID" }
                    )
                }
            };
            out.push(ClaimReport::check(
                id,
                format!("link multigraph of {name} over {{1,2,3,4}}"),
                format!("{{5,6,7}} weight {weight} embedding verified"),
                computed,
            ));
        }
        out.push(ClaimReport::check(
            "link-threshold",
            "heavy-triple threshold at n=7",
            10,
            heavy_triple_threshold(7).unwrap(),
        ));
    }

    for (id, half, edges) in [("crossing-4", 4u32, 48u64), ("crossing-5", 5u32, 100u64)] {
        let h = crossing_construction(half).unwrap();
        let r1 = catalog("R1").unwrap();
        let r2 = catalog("R2").unwrap();
        out.push(ClaimReport::check(
            id,
            format!(
                "crossing construction on {} vertices: edges, R1-free, R2-free",
                2 * half
            ),
            format!("{edges},true,true"),
            format!(
                "{},{},{}",
                h.edge_count(),
                !h.contains_copy(&r1).unwrap(),
                !h.contains_copy(&r2).unwrap()
            ),
        ));
    }

    // ---- tier 2: exact searches (budget-gated) ---------------------------
    let searches_skipped = budget == 0;
    macro_rules! search_claim {
        ($id:literal, $subject:expr, $expected:expr, $run:expr) => {
            if searches_skipped {
                out.push(ClaimReport::skipped($id, $subject, $expected, "budget 0"));
            } else {
                out.push($run);
            }
        };
    }

    search_claim!(
        "search-min-5-4-3",
        "min edges with property (4,3) on 5 vertices",
        3,
        {
            let res = min_edges_with_property(5, 3, 4, 3, budget).unwrap();
            if res.proved_optimal {
                ClaimReport::check(
                    "search-min-5-4-3",
                    "min edges with property (4,3) on 5 vertices",
                    3,
                    res.value,
                )
            } else {
                ClaimReport::skipped(
                    "search-min-5-4-3",
                    "min edges with property (4,3) on 5 vertices",
                    3,
                    "budget exhausted",
                )
            }
        }
    );
    search_claim!(
        "search-max-5-k4",
        "max K_4^3-free edges on 5 vertices",
        7,
        {
            let res = max_edges_avoiding(5, &[catalog("K4").unwrap()], budget, None).unwrap();
            if res.proved_optimal {
                ClaimReport::check(
                    "search-max-5-k4",
                    "max K_4^3-free edges on 5 vertices",
                    7,
                    res.value,
                )
            } else {
                ClaimReport::skipped(
                    "search-max-5-k4",
                    "max K_4^3-free edges on 5 vertices",
                    7,
                    "budget exhausted",
                )
            }
        }
    );
    search_claim!(
        "search-duality-sum",
        "duality: min(5,4,3) + max K_4^3-free = C(5,3)",
        10,
        {
            let a = min_edges_with_property(5, 3, 4, 3, budget).unwrap();
            let b = max_edges_avoiding(5, &[catalog("K4").unwrap()], budget, None).unwrap();
            if a.proved_optimal && b.proved_optimal {
                ClaimReport::check(
                    "search-duality-sum",
                    "duality: min(5,4,3) + max K_4^3-free = C(5,3)",
                    10,
                    a.value + b.value,
                )
            } else {
                ClaimReport::skipped(
                    "search-duality-sum",
                    "duality: min(5,4,3) + max K_4^3-free = C(5,3)",
                    10,
                    "budget exhausted",
                )
            }
        }
    );
    search_claim!(
        "search-min-graph",
        "min edges with property (3,2) on 6 vertices (graphs)",
        6,
        {
            let res = min_edges_with_property(6, 2, 3, 2, budget).unwrap();
            if res.proved_optimal {
                ClaimReport::check(
                    "search-min-graph",
                    "min edges with property (3,2) on 6 vertices (graphs)",
                    6,
                    res.value,
                )
            } else {
                ClaimReport::skipped(
                    "search-min-graph",
                    "min edges with property (3,2) on 6 vertices (graphs)",
                    6,
                    "budget exhausted",
                )
            }
        }
    );
    search_claim!(
        "search-min-5-5-3",
        "min edges with property (5,3) on 5 vertices",
        1,
        {
            let res = min_edges_with_property(5, 3, 5, 3, budget).unwrap();
            if res.proved_optimal {
                ClaimReport::check(
                    "search-min-5-5-3",
                    "min edges with property (5,3) on 5 vertices",
                    1,
                    res.value,
                )
            } else {
                ClaimReport::skipped(
                    "search-min-5-5-3",
                    "min edges with property (5,3) on 5 vertices",
                    1,
                    "budget exhausted",
                )
            }
        }
    );
    search_claim!(
        "density-min-monotone",
        "covering density (q=5,p=3) nondecreasing over n=5..7",
        "1,2,5 nondecreasing",
        {
            match density_sequence(
                &DensityKind::MinProperty { r: 3, q: 5, p: 3 },
                5..=7,
                budget,
            ) {
                Ok(seq) => {
                    let vals: Vec<String> =
                        seq.points.iter().map(|p| p.value.to_string()).collect();
                    ClaimReport::check(
                        "density-min-monotone",
                        "covering density (q=5,p=3) nondecreasing over n=5..7",
                        "1,2,5 nondecreasing",
                        format!("{} nondecreasing", vals.join(",")),
                    )
                }
                Err(e) => ClaimReport::check(
                    "density-min-monotone",
                    "covering density (q=5,p=3) nondecreasing over n=5..7",
                    "1,2,5 nondecreasing",
                    format!("error: {e}"),
                ),
            }
        }
    );
    search_claim!(
        "density-max-monotone",
        "K_4^3-free density nonincreasing over n=4..6",
        "3,7,14 nonincreasing from 3/4",
        {
            let k4 = [catalog("K4").unwrap()];
            match density_sequence(&DensityKind::MaxAvoiding { patterns: &k4 }, 4..=6, budget) {
                Ok(seq) => {
                    let vals: Vec<String> =
                        seq.points.iter().map(|p| p.value.to_string()).collect();
                    let first = seq.points[0].density;
                    ClaimReport::check(
                        "density-max-monotone",
                        "K_4^3-free density nonincreasing over n=4..6",
                        "3,7,14 nonincreasing from 3/4",
                        if first == 0.75 {
                            format!("{} nonincreasing from 3/4", vals.join(","))
                        } else {
                            format!("{} starting at {first}", vals.join(","))
                        },
                    )
                }
                Err(e) => ClaimReport::check(
                    "density-max-monotone",
                    "K_4^3-free density nonincreasing over n=4..6",
                    "3,7,14 nonincreasing from 3/4",
                    format!("error: {e}"),
                ),
            }
        }
    );

    // ---- tier 3: budget-capped stretch target ----------------------------
    if searches_skipped {
        out.push(ClaimReport::skipped(
            "stretch-max-8-r1-r2",
            "max {R1,R2}-free edges on 8 vertices vs the 48-edge construction",
            ">= 48 (equality is a data point, not a verdict)",
            "budget 0",
        ));
    } else {
        let construction = crossing_construction(4).unwrap();
        let res = max_edges_avoiding(
            8,
            &[catalog("R1").unwrap(), catalog("R2").unwrap()],
            budget,
            Some(&construction),
        )
        .unwrap();
        if res.proved_optimal {
            out.push(ClaimReport::check(
                "stretch-max-8-r1-r2",
                "max {R1,R2}-free edges on 8 vertices vs the 48-edge construction",
                "proved value >= 48",
                if res.value >= 48 {
                    "proved value >= 48".to_string()
                } else {
                    format!("proved value {} < 48", res.value)
                },
            ));
        } else {
            out.push(ClaimReport::skipped(
                "stretch-max-8-r1-r2",
                "max {R1,R2}-free edges on 8 vertices vs the 48-edge construction",
                ">= 48 (equality is a data point, not a verdict)",
                &format!(
                    "budget exhausted after {} nodes; best incumbent {}",
                    res.nodes_explored, res.value
                ),
            ));
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_has_no_failures() {
        let claims = run_all(100_000, 7);
        assert!(claims.iter().all(|c| c.status != Status::Fail));
        assert!(claims.len() >= 20);
    }

    #[test]
    fn zero_budget_skips_searches_only() {
        let claims = run_all(0, 7);
        assert!(claims.iter().all(|c| c.status != Status::Fail));
        let skipped: Vec<&str> = claims
            .iter()
            .filter(|c| c.status == Status::SkippedBudget)
            .map(|c| c.id)
            .collect();
        assert!(skipped.iter().all(|id| id.starts_with("search-")
            || id.starts_with("density-")
            || id.starts_with("stretch-")));
        assert!(!skipped.is_empty());
        // catalog claims still pass
        assert!(claims
            .iter()
            .any(|c| c.id == "catalog-edge-counts" && c.status == Status::Pass));
    }

    #[test]
    fn corrupted_catalog_fails_with_counterexample() {
        // drop {1,2,3} from R0: {1,2,3,x} for x in 5..7 becomes independent
        let r0 = catalog("R0").unwrap();
        let corrupted = Hypergraph::from_edge_sets(
            7,
            3,
            r0.edges()
                .filter(|e| *e != VertexSet::from_vertices(&[1, 2, 3]).unwrap()),
        )
        .unwrap();
        let claim = alpha_claim("alpha-r0", "R0", &corrupted, 3);
        assert_eq!(claim.status, Status::Fail);
        assert!(claim.computed.contains("witness"), "{}", claim.computed);
    }
}
