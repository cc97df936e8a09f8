//! Exact computation for Turán-type extremal problems on small r-uniform
//! hypergraphs.
//!
//! The crate provides:
//! - a bitmask [`Hypergraph`] type on up to 64 labeled vertices with
//!   complement, induced restriction, disjoint union, blow-up, subgraph
//!   containment and isomorphism checks ([`hypergraph`]);
//! - independence and clique numbers, the (q,p) covering property, holes
//!   and the hereditary edge-count bound ([`invariants`]);
//! - the named extremal constructions: balanced clique unions, the R/T
//!   catalog, the blow-up T', the unions H1/H2 and the crossing-triple
//!   construction ([`constructions`]);
//! - exact branch-and-bound searches for minimum edges with the covering
//!   property and maximum edges avoiding forbidden patterns, plus verified
//!   monotone density sequences ([`search`]);
//! - the constructive proof procedures: iterative hole removal with
//!   machine-checked step invariants ([`removal`]) and the link-multigraph
//!   argument extracting explicit R-copies ([`link`]);
//! - a plain text and JSON interchange format ([`format`]).
//!
//! All extremal values are exact integers; searches are deterministic and
//! report honest `proved_optimal` flags under node budgets.

pub mod combin;
pub mod constructions;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod invariants;
pub mod link;
pub mod removal;
pub mod search;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, VertexSet};
pub use invariants::{HoleDescriptor, PropertyPair, PropertyVerdict};
pub use search::SearchResult;
