use alloc::vec;
use alloc::vec::Vec;

use super::hopcroft_karp::{Bipartite, Matcher, Matching};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// Bipartite incidence graph of an edge subset: edges on the left, the
/// vertices they cover on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigGraph {
    left: Vec<EdgeId>,
    right: Vec<VertexId>,
    graph: Bipartite,
    removed: Vec<bool>,
}

/// Builds the incidence graph of `a`; both sides in ascending id order.
pub fn build_konig(h: &Hypergraph, a: &[EdgeId]) -> Result<KonigGraph> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut left = a.to_vec();
    left.sort_unstable();
    left.dedup();
    let right = h.gamma(&left)?.to_vec();
    let q = h.q();
    let mut offsets = Vec::with_capacity(left.len() + 1);
    let mut targets = Vec::with_capacity(left.len() * q);
    offsets.push(0);
    for &e in &left {
        for v in h.vertices(e) {
            // gamma(left) contains every incident vertex
            targets.push(right.binary_search(v).unwrap_or_else(|_| unreachable!()));
        }
        offsets.push(targets.len());
    }
    let removed = vec![false; right.len()];
    Ok(KonigGraph {
        graph: Bipartite::from_csr(right.len(), offsets, targets),
        left,
        right,
        removed,
    })
}

impl KonigGraph {
    pub fn left(&self) -> &[EdgeId] {
        &self.left
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    pub fn bipartite(&self) -> &Bipartite {
        &self.graph
    }

    /// Right-side positions adjacent to left position `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        self.graph.neighbors(i)
    }

    pub fn right_index(&self, v: VertexId) -> Option<usize> {
        self.right.binary_search(&v).ok()
    }

    pub fn removed_mask(&self) -> &[bool] {
        &self.removed
    }

    pub fn removed(&self) -> Vec<VertexId> {
        self.right
            .iter()
            .zip(&self.removed)
            .filter_map(|(&v, &r)| r.then_some(v))
            .collect()
    }

    /// Replaces the stored removal mask.
    pub fn set_removed(&mut self, removed: &[VertexId]) -> Result<()> {
        self.removed = self.mask_for(removed)?;
        Ok(())
    }

    pub fn clear_removed(&mut self) {
        self.removed.iter_mut().for_each(|r| *r = false);
    }

    fn mask_for(&self, removed: &[VertexId]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.right.len()];
        for &v in removed {
            let i = self
                .right_index(v)
                .ok_or(Error::RemovedVertexNotInGraph(v))?;
            mask[i] = true;
        }
        Ok(mask)
    }

    /// Maximum matching under the stored removal mask.
    pub fn maximum_matching(&self) -> Matching {
        Matcher::new().maximum(&self.graph, &self.removed, None)
    }

    /// Whether every left node can be matched once `removed` is deleted from
    /// the right side. The stored mask is ignored.
    pub fn has_complete_matching(&self, removed: &[VertexId]) -> Result<bool> {
        let mask = self.mask_for(removed)?;
        Ok(Matcher::new()
            .maximum(&self.graph, &mask, None)
            .is_complete())
    }

    /// Matched `(edge, vertex)` pairs of `m`.
    pub fn pairs(&self, m: &Matching) -> Vec<(EdgeId, VertexId)> {
        m.assignments()
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.map(|r| (self.left[i], self.right[r])))
            .collect()
    }

    pub fn prober(&self) -> Prober<'_> {
        Prober {
            graph: self,
            matcher: Matcher::new(),
            last: None,
            mask: vec![false; self.right.len()],
            calls: 0,
        }
    }
}

/// Runs many removal probes against one graph, warm-starting each search
/// from the previous matching.
#[derive(Debug)]
pub struct Prober<'a> {
    graph: &'a KonigGraph,
    matcher: Matcher,
    last: Option<Matching>,
    mask: Vec<bool>,
    calls: usize,
}

impl Prober<'_> {
    pub fn probe(&mut self, removed: &[VertexId]) -> Result<bool> {
        self.mask.iter_mut().for_each(|r| *r = false);
        for &v in removed {
            let i = self
                .graph
                .right_index(v)
                .ok_or(Error::RemovedVertexNotInGraph(v))?;
            self.mask[i] = true;
        }
        self.calls += 1;
        let m = self
            .matcher
            .maximum(&self.graph.graph, &self.mask, self.last.as_ref());
        let complete = m.is_complete();
        self.last = Some(m);
        Ok(complete)
    }

    /// Number of probes run so far.
    pub fn calls(&self) -> usize {
        self.calls
    }
}
