//! Lazy burning on hypergraphs.
//!
//! A seed set of vertices burns in round one; afterwards any hyperedge with
//! exactly one unburned vertex burns that vertex, and the lazy burning
//! number `b_L` is the smallest seed that burns everything. The crate
//! implements the process itself ([`burn`]), the equivalent
//! characterizations through hypergraph cores ([`burn::core`]), C-matchings
//! on incidence graphs ([`cmatch`]) and (skew) zero forcing ([`force`]),
//! closed-form lower and upper bounds ([`bounds`]), and an exact
//! branch-and-bound solver with certificates ([`solve`]).

pub mod bounds;
pub mod burn;
pub mod cmatch;
pub mod force;
pub mod model;
pub mod solve;

pub use burn::{BurnTrace, ChronList, ChronOutcome, CoreResult};
pub use cmatch::CMatching;
pub use force::ForceTrace;
pub use model::{Graph, Hypergraph, VertexSet};
pub use solve::{Model, SolveResult};
