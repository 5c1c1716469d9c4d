//! Minimum-weight spanning hyperforests of weighted q-uniform hypergraphs.
//!
//! The independent edge sets of a q-uniform hypergraph (every nonempty
//! subset `A` covers at least `|A| + q - 1` vertices) form a matroid. This
//! crate builds optimal bases of it (skeletons) with the greedy algorithm,
//! decides independence through complete matchings in the bipartite
//! edge/vertex incidence graph, and splits skeletons and hypergraphs into
//! their unique connection components.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod combinations;
pub mod decomposition;
pub mod error;
pub mod greedy;
pub mod hypergraph;
pub mod independence;
pub mod matching;
pub mod vertex_set;

pub use decomposition::{
    classify_links, components, components_bruteforce, components_for_basis, hypergraph_components,
    tight_pair_value, ComponentPartition,
};
pub use error::{Error, Result};
pub use greedy::{
    basis_in_order, greedy_order, optimal_skeleton, optimal_skeleton_with,
    skeleton_cardinality_bound, GreedyOptions, Objective, Skeleton, TraceEntry,
};
pub use hypergraph::{EdgeId, EdgeSubset, Hypergraph, VertexId};
pub use independence::{
    extend_check_fast, is_hypertree, is_independent, is_independent_definition,
    is_independent_definition_capped, is_independent_matching, is_tight, phi, removal_sets,
    Decision, Extension, IndependenceVerdict, RemovalMode, Witness,
};
pub use matching::{build_konig, FlowNetwork, KonigGraph};
pub use vertex_set::VertexSet;
