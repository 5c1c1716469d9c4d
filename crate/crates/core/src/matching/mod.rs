//! König (bipartite incidence) representation, complete-matching detection,
//! and integer max-flow.

mod flow;
mod hopcroft_karp;
mod incremental;
mod konig;

pub use flow::FlowNetwork;
pub use hopcroft_karp::{maximum_matching, Bipartite, Matcher, Matching};
pub use incremental::ForestMatching;
pub use konig::{build_konig, KonigGraph, Prober};
