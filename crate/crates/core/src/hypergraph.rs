//! The immutable q-uniform hypergraph model.
//!
//! Vertices and edges are dense indices. Every edge is stored as its `q`
//! vertices in ascending order, so coverage queries reduce to bitset unions.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A weighted q-uniform hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    q: usize,
    vertex_count: usize,
    /// `edge_count * q` vertices, edge `i` at `i*q..(i+1)*q`, each run sorted.
    incidence: Vec<VertexId>,
    weights: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Vertex lists may be given in any
    /// order but must name exactly `q` distinct vertices below `vertex_count`.
    pub fn new(
        q: usize,
        vertex_count: usize,
        edges: Vec<Vec<usize>>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidUniformity(q));
        }
        if edges.len() != weights.len() {
            return Err(Error::WeightCountMismatch {
                edges: edges.len(),
                weights: weights.len(),
            });
        }
        let mut incidence = Vec::with_capacity(edges.len() * q);
        for (i, vertices) in edges.iter().enumerate() {
            let edge = EdgeId(i);
            if let Some(&vertex) = vertices.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    edge,
                    vertex,
                    vertex_count,
                });
            }
            let mut sorted = vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != q || vertices.len() != q {
                return Err(Error::NonUniformEdge {
                    edge,
                    listed: vertices.len(),
                    distinct: sorted.len(),
                    q,
                });
            }
            incidence.extend(sorted.into_iter().map(VertexId));
        }
        for (i, &weight) in weights.iter().enumerate() {
            if !weight.is_finite() {
                return Err(Error::NonFiniteWeight { edge: EdgeId(i) });
            }
            if weight < 0.0 {
                return Err(Error::NegativeWeight {
                    edge: EdgeId(i),
                    weight,
                });
            }
        }
        Ok(Hypergraph {
            q,
            vertex_count,
            incidence,
            weights,
            labels: None,
        })
    }

    /// Attaches presentation labels, one per edge, pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.edge_count() {
            return Err(Error::LabelCountMismatch {
                edges: self.edge_count(),
                labels: labels.len(),
            });
        }
        let mut seen = BTreeMap::new();
        for label in &labels {
            if seen.insert(label.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edge_count() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// The `q` vertices of `e`, ascending. Panics on an unknown edge.
    pub fn vertices(&self, e: EdgeId) -> &[VertexId] {
        &self.incidence[e.0 * self.q..(e.0 + 1) * self.q]
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.weights[e.0]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn label(&self, e: EdgeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[e.0].as_str())
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// The label if present, otherwise the decimal edge index.
    pub fn display_name(&self, e: EdgeId) -> String {
        match self.label(e) {
            Some(l) => l.to_string(),
            None => e.0.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<EdgeId> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(EdgeId)
    }

    /// Vertex set of a single edge.
    pub fn edge_set(&self, e: EdgeId) -> VertexSet {
        let mut set = VertexSet::new(self.vertex_count);
        for &v in self.vertices(e) {
            set.insert(v);
        }
        set
    }

    /// Union of the vertex sets of `a` (the covered set, empty for `a = ∅`).
    pub fn gamma(&self, a: &[EdgeId]) -> Result<VertexSet> {
        let mut set = VertexSet::new(self.vertex_count);
        for &e in a {
            self.check_edge(e)?;
            for &v in self.vertices(e) {
                set.insert(v);
            }
        }
        Ok(set)
    }

    /// Sum of weights over the set `a`, accumulated in ascending edge order.
    pub fn subset_weight(&self, a: &[EdgeId]) -> Result<f64> {
        let mut ids = a.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut total = 0.0;
        for e in ids {
            self.check_edge(e)?;
            total += self.weights[e.0];
        }
        Ok(total)
    }

    /// Vertices that appear in at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        let mut set = VertexSet::new(self.vertex_count);
        for &v in &self.incidence {
            set.insert(v);
        }
        set
    }
}

/// A set of edges with its covered vertex set and total weight cached.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSubset {
    members: Vec<EdgeId>,
    covered: VertexSet,
    weight: f64,
}

impl EdgeSubset {
    pub fn empty(h: &Hypergraph) -> Self {
        EdgeSubset {
            members: Vec::new(),
            covered: VertexSet::new(h.vertex_count()),
            weight: 0.0,
        }
    }

    pub fn from_edges(h: &Hypergraph, edges: &[EdgeId]) -> Result<Self> {
        let mut members = edges.to_vec();
        members.sort_unstable();
        members.dedup();
        let covered = h.gamma(&members)?;
        let weight = h.subset_weight(&members)?;
        Ok(EdgeSubset {
            members,
            covered,
            weight,
        })
    }

    pub fn insert(&mut self, h: &Hypergraph, e: EdgeId) -> Result<()> {
        h.check_edge(e)?;
        match self.members.binary_search(&e) {
            Ok(_) => Err(Error::EdgeAlreadyInSubset(e)),
            Err(pos) => {
                self.members.insert(pos, e);
                for &v in h.vertices(e) {
                    self.covered.insert(v);
                }
                self.weight = self.members.iter().map(|&m| h.weight(m)).sum();
                Ok(())
            }
        }
    }

    /// A copy of this subset with `e` added.
    pub fn with_edge(&self, h: &Hypergraph, e: EdgeId) -> Result<Self> {
        let mut next = self.clone();
        next.insert(h, e)?;
        Ok(next)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    /// Members in ascending edge order.
    pub fn members(&self) -> &[EdgeId] {
        &self.members
    }

    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ids(v: &[usize]) -> Vec<EdgeId> {
        v.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn single_edge_is_valid() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]], vec![1.0]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(
            h.vertices(EdgeId(0)),
            &[VertexId(0), VertexId(1), VertexId(2)]
        );
    }

    #[test]
    fn repeated_vertex_is_non_uniform() {
        let err = Hypergraph::new(3, 3, vec![vec![0, 1, 1]], vec![1.0]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonUniformEdge {
                distinct: 2,
                q: 3,
                ..
            }
        ));
        let err = Hypergraph::new(3, 4, vec![vec![0, 1, 2, 3]], vec![1.0]).unwrap_err();
        assert!(matches!(err, Error::NonUniformEdge { listed: 4, .. }));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 2]], vec![1.0]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 1]], vec![-1.0]),
            Err(Error::NegativeWeight { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 1]], vec![f64::NAN]),
            Err(Error::NonFiniteWeight { .. })
        ));
        assert!(matches!(
            Hypergraph::new(1, 2, vec![], vec![]),
            Err(Error::InvalidUniformity(1))
        ));
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 1]], vec![]),
            Err(Error::WeightCountMismatch { .. })
        ));
    }

    #[test]
    fn ordinary_graph_and_duplicates() {
        let h = Hypergraph::new(
            2,
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![1, 0]],
            vec![1.0, 2.0, 3.0, 4.0],
        )
        .unwrap();
        assert_eq!(h.vertices(EdgeId(3)), h.vertices(EdgeId(0)));
    }

    #[test]
    fn gamma_unions_and_empty() {
        let h = Hypergraph::new(3, 6, vec![vec![1, 2, 3], vec![3, 4, 5]], vec![1.0, 1.0]).unwrap();
        let g = h.gamma(&ids(&[0, 1])).unwrap();
        assert_eq!(g.to_vec(), (1..=5).map(VertexId).collect::<Vec<_>>());
        assert!(h.gamma(&[]).unwrap().is_empty());
        assert_eq!(h.gamma(&ids(&[7])), Err(Error::UnknownEdge(EdgeId(7))));
    }

    #[test]
    fn gamma_four_uniform_triple() {
        let h = Hypergraph::new(
            4,
            7,
            vec![vec![1, 2, 3, 4], vec![3, 4, 5, 6], vec![5, 6, 1, 2]],
            vec![1.0; 3],
        )
        .unwrap();
        let g = h.gamma(&ids(&[0, 1, 2])).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.to_vec(), (1..=6).map(VertexId).collect::<Vec<_>>());
    }

    #[test]
    fn subset_weight_sums() {
        let h = Hypergraph::new(
            2,
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![1.0, 2.0, 3.0],
        )
        .unwrap();
        assert_eq!(h.subset_weight(&ids(&[0, 2])).unwrap(), 4.0);
        assert_eq!(h.subset_weight(&[]).unwrap(), 0.0);
        assert!(h.subset_weight(&ids(&[3])).is_err());
    }

    #[test]
    fn labels_are_unique() {
        let h = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2]], vec![1.0, 1.0]).unwrap();
        let err = h
            .clone()
            .with_labels(vec!["a".into(), "a".into()])
            .unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
        let h = h.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(h.find_label("b"), Some(EdgeId(1)));
        assert_eq!(h.display_name(EdgeId(0)), "a");
    }

    #[test]
    fn edge_subset_caches() {
        let h = Hypergraph::new(
            3,
            6,
            vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 2, 4]],
            vec![1.0, 2.0, 3.0],
        )
        .unwrap();
        let mut s = EdgeSubset::empty(&h);
        s.insert(&h, EdgeId(2)).unwrap();
        s.insert(&h, EdgeId(0)).unwrap();
        assert_eq!(s.members(), &ids(&[0, 2])[..]);
        assert_eq!(s.covered().len(), 4);
        assert_eq!(s.weight(), 4.0);
        assert_eq!(
            s.insert(&h, EdgeId(0)),
            Err(Error::EdgeAlreadyInSubset(EdgeId(0)))
        );
        let all = s.with_edge(&h, EdgeId(1)).unwrap();
        assert_eq!(all.weight(), 6.0);
        assert_eq!(all, EdgeSubset::from_edges(&h, &ids(&[1, 2, 0])).unwrap());
    }
}
