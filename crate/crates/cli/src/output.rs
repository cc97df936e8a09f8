//! JSON response shapes. Field order is part of the documented interface,
//! so every response is a struct rather than an ad-hoc map.

use serde::Serialize;
use turan_core::search::DensityPoint;
use turan_core::Hypergraph;

#[derive(Serialize)]
pub struct ValueWitness {
    pub value: u32,
    pub witness: Vec<u32>,
}

#[derive(Serialize)]
pub struct PropertyResponse {
    pub holds: bool,
    pub counterexample: Option<Vec<u32>>,
}

#[derive(Serialize)]
pub struct HoleResponse {
    pub found: bool,
    pub hole: Option<HoleBody>,
}

#[derive(Serialize)]
pub struct HoleBody {
    pub vertices: Vec<u32>,
    pub width: u32,
    pub clique_number: u32,
    pub divisor: u32,
}

#[derive(Serialize)]
pub struct ContainsResponse {
    pub contains: bool,
    pub embedding: Option<Vec<u32>>,
}

#[derive(Serialize)]
pub struct SearchResponse {
    pub value: u64,
    pub witness: Hypergraph,
    pub proved_optimal: bool,
    pub nodes: u64,
}

#[derive(Serialize)]
pub struct DensityResponse {
    pub points: Vec<DensityPoint>,
    pub direction: &'static str,
}

#[derive(Serialize)]
pub struct RemovalStepBody {
    pub removed: Vec<u32>,
    pub width: u32,
    pub clique_number: u32,
    pub q: u32,
    pub p: u32,
    pub excess: i64,
}

#[derive(Serialize)]
pub struct RemovalResponse {
    pub steps: Vec<RemovalStepBody>,
    pub outcome: &'static str,
    pub remaining: Vec<u32>,
    pub terminal_q: u32,
    pub terminal_p: u32,
    pub terminal_excess: i64,
    pub terminal_edges: u64,
}

#[derive(Serialize)]
pub struct LinkResponse {
    pub base: Vec<u32>,
    pub total_multiplicity: u64,
    pub threshold: Option<u64>,
    pub exceeds_threshold: Option<bool>,
    pub heavy_triple: Option<Vec<u32>>,
    pub triple_weight: Option<u32>,
    pub embedding: Option<Vec<u32>>,
}

#[derive(Serialize)]
pub struct HereditaryRowBody {
    pub subset_size: u32,
    pub block_size: u32,
    pub short_blocks: u32,
    pub bound: u64,
    pub min_edges: u64,
    pub slack: i64,
    pub witness: Vec<u32>,
    pub exhaustive: bool,
}

#[derive(Serialize)]
pub struct HereditaryResponse {
    pub hole: Option<HoleBody>,
    pub rows: Vec<HereditaryRowBody>,
    pub min_slack: Option<i64>,
    pub fully_exhaustive: Option<bool>,
}
