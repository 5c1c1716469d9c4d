use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// A complete matching of a growing hyperforest into the whole vertex
/// universe, extended one edge at a time by augmenting paths.
///
/// Holds the invariant that every accepted edge is matched. A failed
/// extension leaves the matching exactly as it was.
#[derive(Debug, Clone)]
pub struct ForestMatching {
    edge_partner: Vec<Option<VertexId>>,
    vertex_partner: Vec<Option<EdgeId>>,
    removed: Vec<bool>,
    visited: Vec<u32>,
    stamp: u32,
    edge_log: Vec<(EdgeId, Option<VertexId>)>,
    vertex_log: Vec<(VertexId, Option<EdgeId>)>,
    stack: Vec<(EdgeId, usize)>,
}

impl ForestMatching {
    pub fn new(h: &Hypergraph) -> Self {
        ForestMatching {
            edge_partner: vec![None; h.edge_count()],
            vertex_partner: vec![None; h.vertex_count()],
            removed: vec![false; h.vertex_count()],
            visited: vec![0; h.vertex_count()],
            stamp: 0,
            edge_log: Vec::new(),
            vertex_log: Vec::new(),
            stack: Vec::new(),
        }
    }

    pub fn partner(&self, e: EdgeId) -> Option<VertexId> {
        self.edge_partner[e.0]
    }

    /// Tries to match every accepted edge plus `a` while avoiding `removed`.
    /// On success `a` becomes part of the matched forest. If `a` is already
    /// matched this re-matches the forest around `removed`.
    pub fn try_extend(&mut self, h: &Hypergraph, a: EdgeId, removed: &[VertexId]) -> bool {
        self.edge_log.clear();
        self.vertex_log.clear();
        for &v in removed {
            self.removed[v.0] = true;
        }
        let mut free = Vec::with_capacity(removed.len() + 1);
        if self.edge_partner[a.0].is_none() {
            free.push(a);
        }
        for &v in removed {
            if let Some(e) = self.vertex_partner[v.0] {
                self.set_edge(e, None);
                self.set_vertex(v, None);
                free.push(e);
            }
        }
        let ok = free.iter().all(|&e| self.augment(h, e));
        if !ok {
            while let Some((e, p)) = self.edge_log.pop() {
                self.edge_partner[e.0] = p;
            }
            while let Some((v, p)) = self.vertex_log.pop() {
                self.vertex_partner[v.0] = p;
            }
        }
        for &v in removed {
            self.removed[v.0] = false;
        }
        ok
    }

    /// Drops `e` from the matched forest.
    pub fn remove_edge(&mut self, e: EdgeId) {
        if let Some(v) = self.edge_partner[e.0].take() {
            self.vertex_partner[v.0] = None;
        }
    }

    fn set_edge(&mut self, e: EdgeId, p: Option<VertexId>) {
        self.edge_log.push((e, self.edge_partner[e.0]));
        self.edge_partner[e.0] = p;
    }

    fn set_vertex(&mut self, v: VertexId, p: Option<EdgeId>) {
        self.vertex_log.push((v, self.vertex_partner[v.0]));
        self.vertex_partner[v.0] = p;
    }

    fn next_stamp(&mut self) -> u32 {
        if self.stamp == u32::MAX {
            self.visited.iter_mut().for_each(|s| *s = 0);
            self.stamp = 0;
        }
        self.stamp += 1;
        self.stamp
    }

    /// Single augmenting-path search from the free edge `root`.
    fn augment(&mut self, h: &Hypergraph, root: EdgeId) -> bool {
        let stamp = self.next_stamp();
        let q = h.q();
        self.stack.clear();
        self.stack.push((root, 0));
        while let Some(top) = self.stack.last_mut() {
            let (e, i) = *top;
            if i == q {
                self.stack.pop();
                continue;
            }
            top.1 += 1;
            let v = h.vertices(e)[i];
            if self.removed[v.0] || self.visited[v.0] == stamp {
                continue;
            }
            self.visited[v.0] = stamp;
            match self.vertex_partner[v.0] {
                None => {
                    // each stack entry takes the vertex its cursor just passed
                    for k in 0..self.stack.len() {
                        let (ek, ik) = self.stack[k];
                        let vk = h.vertices(ek)[ik - 1];
                        self.set_edge(ek, Some(vk));
                        self.set_vertex(vk, Some(ek));
                    }
                    return true;
                }
                Some(next) => self.stack.push((next, 0)),
            }
        }
        false
    }
}
