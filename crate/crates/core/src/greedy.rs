//! Minimum (or maximum) weight skeleton by matroid greedy.
//!
//! Edges are visited in weight order with ties broken by ascending id. Each
//! candidate is accepted iff the accepted set stays independent, decided by
//! [`extend_check_fast`]: an edge bringing a new vertex is accepted outright,
//! otherwise a single complete-matching search settles it.

use alloc::vec::Vec;

use crate::decomposition::{self, ComponentPartition};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, EdgeSubset, Hypergraph};
use crate::independence::{extend_check_fast, removal_sets, Decision, RemovalMode};
use crate::matching::ForestMatching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    #[default]
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GreedyOptions {
    pub objective: Objective,
    pub removals: RemovalMode,
    /// Carry one matching of the accepted set across candidates and extend
    /// it by augmenting paths instead of rebuilding the incidence graph per
    /// candidate. Decisions are identical either way.
    pub incremental: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub edge: EdgeId,
    pub decision: Decision,
    pub matching_calls: usize,
}

/// A maximal independent edge set together with the decision trace that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Skeleton {
    edges: EdgeSubset,
    trace: Vec<TraceEntry>,
    components: Option<ComponentPartition>,
}

impl Skeleton {
    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.weight()
    }

    /// One entry per visited candidate, in visiting order.
    pub fn trace(&self) -> &[TraceEntry] {
        &self.trace
    }

    pub fn matching_calls(&self) -> usize {
        self.trace.iter().map(|t| t.matching_calls).sum()
    }

    pub fn components(&self) -> Option<&ComponentPartition> {
        self.components.as_ref()
    }

    /// Decomposes the skeleton into its components and classifies every
    /// other edge of `h` as a link of one of them.
    pub fn compute_components(&mut self, h: &Hypergraph) -> Result<&ComponentPartition> {
        let parts = decomposition::components(h, self.edges.members())?;
        let linked = decomposition::classify_links(h, self.edges.members(), parts)?;
        Ok(self.components.insert(linked))
    }
}

/// Candidate order: by weight (ascending to minimize, descending to
/// maximize), ties by ascending edge id.
pub fn greedy_order(h: &Hypergraph, objective: Objective) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = h.edge_ids().collect();
    order.sort_by(|&a, &b| {
        let by_weight = h.weight(a).total_cmp(&h.weight(b));
        let by_weight = match objective {
            Objective::Minimize => by_weight,
            Objective::Maximize => by_weight.reverse(),
        };
        by_weight.then(a.cmp(&b))
    });
    order
}

pub fn optimal_skeleton(h: &Hypergraph, objective: Objective) -> Skeleton {
    optimal_skeleton_with(
        h,
        &GreedyOptions {
            objective,
            ..GreedyOptions::default()
        },
    )
}

pub fn optimal_skeleton_with(h: &Hypergraph, options: &GreedyOptions) -> Skeleton {
    let order = greedy_order(h, options.objective);
    basis_in_order(h, &order, options).expect("greedy order holds valid, distinct edge ids")
}

/// Greedy over an explicit candidate order. Repeated ids are skipped.
pub fn basis_in_order(
    h: &Hypergraph,
    order: &[EdgeId],
    options: &GreedyOptions,
) -> Result<Skeleton> {
    let mut w = EdgeSubset::empty(h);
    let mut trace = Vec::with_capacity(order.len());
    let mut forest = options.incremental.then(|| ForestMatching::new(h));
    let mut visited = alloc::vec![false; h.edge_count()];
    for &a in order {
        h.check_edge(a)?;
        if core::mem::replace(&mut visited[a.0], true) {
            continue;
        }
        let entry = match forest.as_mut() {
            None => {
                let ext = extend_check_fast(h, &w, a, options.removals)?;
                TraceEntry {
                    edge: a,
                    decision: ext.decision,
                    matching_calls: ext.matching_calls,
                }
            }
            Some(forest) => extend_incremental(h, &w, a, options.removals, forest),
        };
        if entry.decision.accepted() {
            w.insert(h, a)?;
        }
        trace.push(entry);
    }
    Ok(Skeleton {
        edges: w,
        trace,
        components: None,
    })
}

fn extend_incremental(
    h: &Hypergraph,
    w: &EdgeSubset,
    a: EdgeId,
    mode: RemovalMode,
    forest: &mut ForestMatching,
) -> TraceEntry {
    let new_vertex = h.vertices(a).iter().any(|&v| !w.covered().contains(v));
    if new_vertex {
        let matched = forest.try_extend(h, a, &[]);
        debug_assert!(matched, "an edge with an uncovered vertex always augments");
        return TraceEntry {
            edge: a,
            decision: Decision::NewVertex,
            matching_calls: 0,
        };
    }
    let mut calls = 0;
    let mut accepted = true;
    for removal in removal_sets(h, a, mode) {
        calls += 1;
        if !forest.try_extend(h, a, &removal) {
            accepted = false;
            break;
        }
    }
    if !accepted {
        forest.remove_edge(a);
    }
    TraceEntry {
        edge: a,
        decision: if accepted {
            Decision::MatchingAccepted
        } else {
            Decision::MatchingRejected
        },
        matching_calls: calls,
    }
}

/// Checks `|W| = Σ (|Γ T_i| - q + 1)` over the skeleton's components.
pub fn skeleton_cardinality_bound(h: &Hypergraph, s: &Skeleton) -> Result<bool> {
    let parts = s.components().ok_or(Error::ComponentsNotComputed)?;
    let q = h.q() as i64;
    let total: i64 = (0..parts.len())
        .map(|i| parts.vertex_cover(i).len() as i64 - q + 1)
        .sum();
    Ok(total == s.edges().len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn worked() -> Hypergraph {
        Hypergraph::new(
            3,
            6,
            vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 2, 4], vec![1, 4, 5]],
            vec![1.0, 2.0, 3.0, 4.0],
        )
        .unwrap()
    }

    fn ids(v: &[usize]) -> Vec<EdgeId> {
        v.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn worked_instance_trace() {
        let h = worked();
        for incremental in [false, true] {
            let opts = GreedyOptions {
                incremental,
                ..Default::default()
            };
            let s = optimal_skeleton_with(&h, &opts);
            assert_eq!(s.edges().members(), &ids(&[0, 1, 2])[..]);
            assert_eq!(s.total_weight(), 6.0);
            let decisions: Vec<_> = s.trace().iter().map(|t| t.decision).collect();
            assert_eq!(
                decisions,
                vec![
                    Decision::NewVertex,
                    Decision::NewVertex,
                    Decision::MatchingAccepted,
                    Decision::MatchingRejected
                ]
            );
            assert_eq!(s.matching_calls(), 2);
        }
    }

    #[test]
    fn maximize_reverses_order() {
        let h = worked();
        assert_eq!(greedy_order(&h, Objective::Maximize), ids(&[3, 2, 1, 0]));
        let s = optimal_skeleton(&h, Objective::Maximize);
        // u, z, y accepted (|Γ| = 5), then x rejected
        assert_eq!(s.edges().members(), &ids(&[1, 2, 3])[..]);
        assert_eq!(s.total_weight(), 9.0);
    }

    #[test]
    fn ties_break_by_id() {
        let h =
            Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], vec![1.0; 3]).unwrap();
        assert_eq!(greedy_order(&h, Objective::Minimize), ids(&[0, 1, 2]));
        let s = optimal_skeleton(&h, Objective::Minimize);
        assert_eq!(s.edges().members(), &ids(&[0, 1])[..]);
    }

    #[test]
    fn path_graph_matches_kruskal() {
        let h = Hypergraph::new(
            2,
            3,
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            vec![1.0, 2.0, 3.0],
        )
        .unwrap();
        let s = optimal_skeleton(&h, Objective::Minimize);
        assert_eq!(s.edges().members(), &ids(&[0, 1])[..]);
        assert_eq!(s.total_weight(), 3.0);
    }

    #[test]
    fn single_edge_and_empty() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]], vec![2.5]).unwrap();
        let s = optimal_skeleton(&h, Objective::Minimize);
        assert_eq!(s.edges().members(), &ids(&[0])[..]);
        assert_eq!(s.total_weight(), 2.5);
        let empty = Hypergraph::new(3, 4, vec![], vec![]).unwrap();
        let s = optimal_skeleton(&empty, Objective::Minimize);
        assert!(s.edges().is_empty());
        assert_eq!(s.total_weight(), 0.0);
    }

    #[test]
    fn strict_mode_same_basis() {
        let h = worked();
        let strict = optimal_skeleton_with(
            &h,
            &GreedyOptions {
                removals: RemovalMode::Strict,
                ..Default::default()
            },
        );
        assert_eq!(strict.edges().members(), &ids(&[0, 1, 2])[..]);
        // z: three probes accepted, u: first probe rejects
        assert_eq!(strict.matching_calls(), 4);
    }

    #[test]
    fn cardinality_bound_needs_components() {
        let h = worked();
        let mut s = optimal_skeleton(&h, Objective::Minimize);
        assert_eq!(
            skeleton_cardinality_bound(&h, &s),
            Err(Error::ComponentsNotComputed)
        );
        s.compute_components(&h).unwrap();
        assert!(skeleton_cardinality_bound(&h, &s).unwrap());

        let two =
            Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]], vec![1.0, 1.0]).unwrap();
        let mut s = optimal_skeleton(&two, Objective::Minimize);
        s.compute_components(&two).unwrap();
        assert_eq!(s.components().unwrap().len(), 2);
        assert!(skeleton_cardinality_bound(&two, &s).unwrap());
    }

    #[test]
    fn duplicate_order_entries_are_skipped() {
        let h = worked();
        let s = basis_in_order(&h, &ids(&[0, 0, 1, 2, 3]), &GreedyOptions::default()).unwrap();
        assert_eq!(s.trace().len(), 4);
        assert!(basis_in_order(&h, &ids(&[7]), &GreedyOptions::default()).is_err());
    }
}
