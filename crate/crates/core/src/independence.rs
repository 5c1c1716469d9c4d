//! Independence in the hypergraphic matroid.
//!
//! An edge set `A` is independent when every nonempty `A' ⊆ A` covers at
//! least `|A'| + q - 1` vertices. Three routes decide it:
//!
//! * [`is_independent_definition`] enumerates subsets directly (exponential,
//!   verification only);
//! * [`is_independent_matching`] deletes every `(q-1)`-set of covered
//!   vertices from the incidence graph and asks for a complete matching;
//! * [`extend_check_fast`] decides `W + a` for an independent `W` with at
//!   most one matching search (or none, when `a` brings a new vertex).

use alloc::vec;
use alloc::vec::Vec;

use crate::combinations::Combinations;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, EdgeSubset, Hypergraph, VertexId};
use crate::matching::build_konig;

/// Default size cap for the exhaustive definition oracle.
pub const DEFINITION_ORACLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A minimum-cardinality subset violating the covering inequality.
    Subset(Vec<EdgeId>),
    /// A removal set after which no complete matching exists.
    Removal(Vec<VertexId>),
    /// Adding `edge` to the independent set of the edges before it fails
    /// the matching test with `removal` (a subset of the edge's vertices).
    Extension {
        edge: EdgeId,
        removal: Vec<VertexId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceVerdict {
    pub independent: bool,
    pub witness: Option<Witness>,
}

impl IndependenceVerdict {
    fn independent() -> Self {
        IndependenceVerdict {
            independent: true,
            witness: None,
        }
    }

    fn dependent(witness: Witness) -> Self {
        IndependenceVerdict {
            independent: false,
            witness: Some(witness),
        }
    }
}

/// Which removal sets the accelerated extension test probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalMode {
    /// The `q - 1` smallest vertices of the candidate edge.
    #[default]
    Single,
    /// All `q` subsets of size `q - 1` of the candidate edge.
    Strict,
}

/// How a candidate edge was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    /// The edge covers a vertex outside the current set; accepted outright.
    NewVertex,
    MatchingAccepted,
    MatchingRejected,
}

impl Decision {
    pub fn accepted(self) -> bool {
        !matches!(self, Decision::MatchingRejected)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::NewVertex => "new-vertex",
            Decision::MatchingAccepted => "matching-accepted",
            Decision::MatchingRejected => "matching-rejected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extension {
    pub decision: Decision,
    pub matching_calls: usize,
}

impl Extension {
    pub fn independent(&self) -> bool {
        self.decision.accepted()
    }
}

fn normalized(h: &Hypergraph, a: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let mut ids = a.to_vec();
    ids.sort_unstable();
    ids.dedup();
    for &e in &ids {
        h.check_edge(e)?;
    }
    Ok(ids)
}

/// Rank-like covering function `|Γ A| - q + 1`, zero on the empty set.
pub fn phi(h: &Hypergraph, a: &[EdgeId]) -> Result<i64> {
    let covered = h.gamma(a)?;
    if a.is_empty() {
        return Ok(0);
    }
    Ok(covered.len() as i64 - h.q() as i64 + 1)
}

/// Exhaustive check of the covering inequality over all nonempty subsets.
pub fn is_independent_definition(h: &Hypergraph, a: &[EdgeId]) -> Result<IndependenceVerdict> {
    is_independent_definition_capped(h, a, DEFINITION_ORACLE_CAP)
}

pub fn is_independent_definition_capped(
    h: &Hypergraph,
    a: &[EdgeId],
    cap: usize,
) -> Result<IndependenceVerdict> {
    let ids = normalized(h, a)?;
    if ids.len() > cap {
        return Err(Error::SubsetTooLargeForExhaustiveOracle {
            size: ids.len(),
            cap,
        });
    }
    let q = h.q();
    let mut seen = vec![0u32; h.vertex_count()];
    let mut stamp = 0u32;
    for k in 1..=ids.len() {
        let mut combos = Combinations::new(ids.len(), k);
        while let Some(idx) = combos.next_combination() {
            stamp += 1;
            let mut covered = 0;
            for &i in idx {
                for &v in h.vertices(ids[i]) {
                    if seen[v.0] != stamp {
                        seen[v.0] = stamp;
                        covered += 1;
                    }
                }
            }
            if covered + 1 < k + q {
                let subset = idx.iter().map(|&i| ids[i]).collect();
                return Ok(IndependenceVerdict::dependent(Witness::Subset(subset)));
            }
        }
    }
    Ok(IndependenceVerdict::independent())
}

/// Complete-matching test over every `(q-1)`-subset of covered vertices.
/// The witness is the lexicographically first failing removal.
pub fn is_independent_matching(h: &Hypergraph, a: &[EdgeId]) -> Result<IndependenceVerdict> {
    let ids = normalized(h, a)?;
    if ids.is_empty() {
        return Ok(IndependenceVerdict::independent());
    }
    let konig = build_konig(h, &ids)?;
    let right = konig.right();
    let k = h.q() - 1;
    let mut combos = Combinations::new(right.len(), k);
    if right.len() < ids.len() + k {
        // too few vertices survive any removal
        let first = combos.next_combination().unwrap_or(&[]);
        let removal = first.iter().map(|&i| right[i]).collect();
        return Ok(IndependenceVerdict::dependent(Witness::Removal(removal)));
    }
    let mut prober = konig.prober();
    let mut removal = Vec::with_capacity(k);
    while let Some(idx) = combos.next_combination() {
        removal.clear();
        removal.extend(idx.iter().map(|&i| right[i]));
        if !prober.probe(&removal)? {
            return Ok(IndependenceVerdict::dependent(Witness::Removal(removal)));
        }
    }
    Ok(IndependenceVerdict::independent())
}

/// Removal sets probed for candidate `a`: each a `(q-1)`-subset of its
/// vertices, lexicographic.
pub fn removal_sets(h: &Hypergraph, a: EdgeId, mode: RemovalMode) -> Vec<Vec<VertexId>> {
    let vertices = h.vertices(a);
    let q = h.q();
    match mode {
        RemovalMode::Single => vec![vertices[..q - 1].to_vec()],
        RemovalMode::Strict => {
            let mut out = Vec::with_capacity(q);
            let mut combos = Combinations::new(q, q - 1);
            while let Some(idx) = combos.next_combination() {
                out.push(idx.iter().map(|&i| vertices[i]).collect());
            }
            out
        }
    }
}

/// Decides whether `w + a` is independent, given that `w` is.
///
/// If `a` covers a vertex outside `w` the answer is yes without any
/// matching search. Otherwise one search (or `q` searches in strict mode)
/// runs on the incidence graph of `w + a` with `q - 1` vertices of `a`
/// deleted.
pub fn extend_check_fast(
    h: &Hypergraph,
    w: &EdgeSubset,
    a: EdgeId,
    mode: RemovalMode,
) -> Result<Extension> {
    h.check_edge(a)?;
    if w.contains(a) {
        return Err(Error::EdgeAlreadyInSubset(a));
    }
    let shared = h
        .vertices(a)
        .iter()
        .filter(|&&v| w.covered().contains(v))
        .count();
    if shared < h.q() {
        return Ok(Extension {
            decision: Decision::NewVertex,
            matching_calls: 0,
        });
    }
    let mut members = w.members().to_vec();
    members.push(a);
    let konig = build_konig(h, &members)?;
    let mut prober = konig.prober();
    let mut accepted = true;
    for removal in removal_sets(h, a, mode) {
        if !prober.probe(&removal)? {
            accepted = false;
            break;
        }
    }
    Ok(Extension {
        decision: if accepted {
            Decision::MatchingAccepted
        } else {
            Decision::MatchingRejected
        },
        matching_calls: prober.calls(),
    })
}

/// Polynomial independence test: adds the edges of `a` in ascending order
/// with [`extend_check_fast`]. The witness names the first edge that cannot
/// be added and the removal that blocked it.
pub fn is_independent(h: &Hypergraph, a: &[EdgeId]) -> Result<IndependenceVerdict> {
    let ids = normalized(h, a)?;
    let mut w = EdgeSubset::empty(h);
    for e in ids {
        if !extend_check_fast(h, &w, e, RemovalMode::Single)?.independent() {
            let removal = removal_sets(h, e, RemovalMode::Single).remove(0);
            return Ok(IndependenceVerdict::dependent(Witness::Extension {
                edge: e,
                removal,
            }));
        }
        w.insert(h, e)?;
    }
    Ok(IndependenceVerdict::independent())
}

/// `|Γ A| - q + 1 == |A|`. Says nothing about independence.
pub fn is_tight(h: &Hypergraph, a: &[EdgeId]) -> Result<bool> {
    let ids = normalized(h, a)?;
    if ids.is_empty() {
        return Ok(false);
    }
    Ok(phi(h, &ids)? == ids.len() as i64)
}

/// Independent and tight.
pub fn is_hypertree(h: &Hypergraph, w: &[EdgeId]) -> Result<bool> {
    Ok(is_tight(h, w)? && is_independent_matching(h, w)?.independent)
}
