//! The iterative hole-removal procedure: starting from a hypergraph with the
//! (q,p) covering property, repeatedly cut off a small hole and shrink the
//! pair, checking at every step that the restriction keeps the derived
//! property and that the excess a*p - q strictly increases.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::invariants::{
    excess, find_hole, has_property, HoleDescriptor, PropertyPair, PropertyVerdict,
};

#[derive(Clone, Copy, Debug)]
pub struct RemovalParams {
    /// The divisor a in the hole condition w > a*v.
    pub divisor: u32,
    pub q: u32,
    pub p: u32,
    /// Scale of the removal: only holes of width at most divisor*block are
    /// cut, and the run stops once q drops below 2*divisor*block.
    pub block: u32,
}

/// One removal step: the state (q, p, excess) in which the hole was found,
/// and the hole itself in the original vertex labels.
#[derive(Clone, Copy, Debug)]
pub struct RemovalStep {
    pub q: u32,
    pub p: u32,
    pub excess: i64,
    pub hole: HoleDescriptor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalOutcome {
    /// The final restriction has no hole of width <= divisor*block.
    HoleFree,
    /// A hole remains but q fell below 2*divisor*block (or the pair would
    /// degenerate), so the run stopped.
    ExcessExhausted,
}

#[derive(Clone, Debug)]
pub struct RemovalTrace {
    pub steps: Vec<RemovalStep>,
    pub outcome: RemovalOutcome,
    /// Surviving vertices, in the original labels.
    pub remaining: VertexSet,
    /// The final restriction, relabeled 1..|remaining|.
    pub terminal: Hypergraph,
    pub terminal_q: u32,
    pub terminal_p: u32,
    pub terminal_excess: i64,
}

/// Check the single-step claim behind the procedure: removing a (w,v)-hole
/// from a graph with property (q,p) leaves property (q-w, p-v) on the rest.
pub fn verify_removal_step(
    h: &Hypergraph,
    hole: &HoleDescriptor,
    pp: PropertyPair,
) -> Result<PropertyVerdict> {
    if hole.width >= pp.q() {
        return Err(Error::InvalidParameter(format!(
            "hole width {} must be below q={}",
            hole.width,
            pp.q()
        )));
    }
    if hole.clique >= pp.p() {
        // the derived clique demand is vacuous
        return Ok(PropertyVerdict::Holds);
    }
    let rest = h.vertex_set().minus(hole.set);
    let sub = h.induced(rest)?;
    has_property(
        &sub,
        PropertyPair::new(pp.q() - hole.width, pp.p() - hole.clique)?,
    )
}

/// Run the removal procedure. With `check_precondition` the input is first
/// verified to have property (q,p) and rejected otherwise; pass false to
/// experiment on unchecked inputs.
pub fn run_hole_removal(
    h: &Hypergraph,
    params: RemovalParams,
    check_precondition: bool,
) -> Result<RemovalTrace> {
    let RemovalParams {
        divisor,
        q,
        p,
        block,
    } = params;
    let n = h.vertex_count();
    let r = h.uniformity();
    if !(2..=64).contains(&divisor) {
        return Err(Error::InvalidParameter(format!(
            "divisor must be in 2..=64, got {divisor}"
        )));
    }
    if block < r {
        return Err(Error::InvalidParameter(format!(
            "block size must be at least the uniformity {r}, got {block}"
        )));
    }
    if q > n {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds vertex count {n}"
        )));
    }
    let pair = PropertyPair::new(q, p)?;
    if check_precondition {
        if let PropertyVerdict::Fails(witness) = has_property(h, pair)? {
            return Err(Error::MissingProperty { q, p, witness });
        }
    }

    let max_width = divisor.saturating_mul(block);
    let stop_q = 2 * max_width;
    let mut active = h.vertex_set();
    let (mut cur_q, mut cur_p) = (q, p);
    let mut steps = Vec::new();

    loop {
        let (sub, map) = h.induced_with_map(active)?;
        let hole_here = find_hole(&sub, divisor, max_width.min(sub.vertex_count()))?;
        let outcome = match hole_here {
            None => Some(RemovalOutcome::HoleFree),
            // mirror the proof: stop once q is too small to keep cutting,
            // or if the derived pair would degenerate
            Some(hole) if cur_q < stop_q || hole.clique >= cur_p => {
                Some(RemovalOutcome::ExcessExhausted)
            }
            Some(_) => None,
        };
        if let Some(outcome) = outcome {
            return Ok(RemovalTrace {
                steps,
                outcome,
                remaining: active,
                terminal: sub,
                terminal_q: cur_q,
                terminal_p: cur_p,
                terminal_excess: excess(cur_q, cur_p, divisor),
            });
        }
        let hole = hole_here.expect("checked above");
        let original_set = VertexSet::from_vertices(
            &hole
                .set
                .vertices()
                .map(|v| map[v as usize - 1])
                .collect::<Vec<_>>(),
        )?;
        let original_hole = HoleDescriptor {
            set: original_set,
            ..hole
        };
        let cur_excess = excess(cur_q, cur_p, divisor);

        let next_q = cur_q - hole.width;
        let next_p = cur_p - hole.clique;
        let next_excess = excess(next_q, next_p, divisor);
        if next_excess <= cur_excess {
            return Err(Error::InvariantViolation(format!(
                "excess did not increase: {cur_excess} -> {next_excess}"
            )));
        }

        // the restriction must keep the derived property whenever the
        // current state has its own; a failure here means a bug
        match verify_removal_step(&sub, &hole, PropertyPair::new(cur_q, cur_p)?)? {
            PropertyVerdict::Holds => {}
            PropertyVerdict::Fails(w) => {
                return Err(Error::InvariantViolation(format!(
                    "restriction lost property ({next_q},{next_p}); counterexample {w}"
                )));
            }
        }

        steps.push(RemovalStep {
            q: cur_q,
            p: cur_p,
            excess: cur_excess,
            hole: original_hole,
        });
        active = active.minus(original_set);
        cur_q = next_q;
        cur_p = next_p;
    }
}
