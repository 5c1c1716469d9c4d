//! Scaling benchmark rows for the greedy skeleton.

use std::fmt;
use std::time::Instant;

use hyperspan_core::{optimal_skeleton_with, GreedyOptions};

use crate::testkit::{random_hypergraph, GenConfig, TestkitError};

pub const BENCH_HEADER: &str = "q,vertices,edges,accepted,matching_calls,wall_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub q: usize,
    pub vertices: usize,
    pub edges: usize,
    pub accepted: usize,
    pub matching_calls: usize,
    pub wall_ms: f64,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{:.3}",
            self.q, self.vertices, self.edges, self.accepted, self.matching_calls, self.wall_ms
        )
    }
}

/// Default vertex count for a bench size: one vertex per five edges.
pub fn default_vertices(q: usize, edges: usize) -> usize {
    (edges / 5).max(q + 1)
}

/// Times the greedy skeleton on a seeded random instance. Generation is
/// not timed.
pub fn bench_row(
    q: usize,
    vertices: usize,
    edges: usize,
    seed: u64,
    options: &GreedyOptions,
) -> Result<BenchRow, TestkitError> {
    let h = random_hypergraph(&GenConfig {
        seed,
        q,
        vertex_count: vertices,
        edge_count: edges,
        weight_range: (0.0, 1.0),
        distinct_weights: false,
    })?;
    let start = Instant::now();
    let skeleton = optimal_skeleton_with(&h, options);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(BenchRow {
        q,
        vertices,
        edges,
        accepted: skeleton.edges().len(),
        matching_calls: skeleton.matching_calls(),
        wall_ms,
    })
}
