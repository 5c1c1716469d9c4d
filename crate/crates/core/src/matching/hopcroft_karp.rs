//! Hopcroft-Karp maximum bipartite matching over a CSR adjacency.
//!
//! Alternates a BFS that layers the left side by shortest alternating
//! distance from free left nodes with a DFS that augments along
//! vertex-disjoint shortest paths. The DFS is iterative so long augmenting
//! paths cannot exhaust the stack.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

const NIL: usize = usize::MAX;
const INF: usize = usize::MAX;

/// Bipartite graph stored as compressed rows over the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    right_count: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Bipartite {
    /// `adjacency[i]` lists the right neighbours of left node `i`.
    ///
    /// Panics if a neighbour index is not below `right_count`.
    pub fn new(right_count: usize, adjacency: &[Vec<usize>]) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for row in adjacency {
            for &r in row {
                assert!(r < right_count, "right node {r} out of range");
                targets.push(r);
            }
            offsets.push(targets.len());
        }
        Bipartite {
            right_count,
            offsets,
            targets,
        }
    }

    pub(crate) fn from_csr(right_count: usize, offsets: Vec<usize>, targets: Vec<usize>) -> Self {
        debug_assert_eq!(offsets.last().copied(), Some(targets.len()));
        Bipartite {
            right_count,
            offsets,
            targets,
        }
    }

    pub fn left_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.targets[self.offsets[left]..self.offsets[left + 1]]
    }
}

/// A matching: for each left node, its partner on the right, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    assign: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn partner(&self, left: usize) -> Option<usize> {
        self.assign[left]
    }

    pub fn assignments(&self) -> &[Option<usize>] {
        &self.assign
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Every left node is matched.
    pub fn is_complete(&self) -> bool {
        self.size == self.assign.len()
    }
}

/// Reusable scratch state for repeated matching searches.
///
/// A `Matcher` is a single-threaded unit of work; give each thread its own.
#[derive(Debug, Default, Clone)]
pub struct Matcher {
    pair_left: Vec<usize>,
    pair_right: Vec<usize>,
    dist: Vec<usize>,
    cursor: Vec<usize>,
    queue: VecDeque<usize>,
    stack: Vec<usize>,
}

impl Matcher {
    pub fn new() -> Self {
        Self::default()
    }

    /// Maximum matching of `g` avoiding every right node with `removed[r]`.
    ///
    /// `warm` seeds the search; pairs that are not adjacencies, touch a
    /// removed node, or collide with an earlier pair are discarded.
    pub fn maximum(
        &mut self,
        g: &Bipartite,
        removed: &[bool],
        warm: Option<&Matching>,
    ) -> Matching {
        assert_eq!(removed.len(), g.right_count());
        let n = g.left_count();
        self.pair_left.clear();
        self.pair_left.resize(n, NIL);
        self.pair_right.clear();
        self.pair_right.resize(g.right_count(), NIL);
        self.dist.clear();
        self.dist.resize(n, INF);
        self.cursor.clear();
        self.cursor.resize(n, 0);

        let mut size = 0;
        if let Some(w) = warm.filter(|w| w.assign.len() == n) {
            for (u, r) in w.assign.iter().enumerate() {
                if let Some(r) = *r {
                    if r < g.right_count()
                        && !removed[r]
                        && self.pair_right[r] == NIL
                        && g.neighbors(u).contains(&r)
                    {
                        self.pair_left[u] = r;
                        self.pair_right[r] = u;
                        size += 1;
                    }
                }
            }
        }

        while size < n && self.layer(g, removed) {
            for u in 0..n {
                self.cursor[u] = g.offsets[u];
            }
            for u in 0..n {
                if self.pair_left[u] == NIL && self.augment(g, removed, u) {
                    size += 1;
                }
            }
        }

        Matching {
            assign: self
                .pair_left
                .iter()
                .map(|&r| (r != NIL).then_some(r))
                .collect(),
            size,
        }
    }

    /// BFS layering. Returns whether some free right node is reachable.
    fn layer(&mut self, g: &Bipartite, removed: &[bool]) -> bool {
        self.queue.clear();
        for u in 0..g.left_count() {
            if self.pair_left[u] == NIL {
                self.dist[u] = 0;
                self.queue.push_back(u);
            } else {
                self.dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = self.queue.pop_front() {
            for &r in g.neighbors(u) {
                if removed[r] {
                    continue;
                }
                let w = self.pair_right[r];
                if w == NIL {
                    found = true;
                } else if self.dist[w] == INF {
                    self.dist[w] = self.dist[u] + 1;
                    self.queue.push_back(w);
                }
            }
        }
        found
    }

    fn augment(&mut self, g: &Bipartite, removed: &[bool], root: usize) -> bool {
        self.stack.clear();
        self.stack.push(root);
        while let Some(&u) = self.stack.last() {
            let end = g.offsets[u + 1];
            let mut descended = false;
            while self.cursor[u] < end {
                let r = g.targets[self.cursor[u]];
                if !removed[r] {
                    let w = self.pair_right[r];
                    if w == NIL {
                        // Every node on the stack takes the right node its cursor points at.
                        for &x in &self.stack {
                            let rx = g.targets[self.cursor[x]];
                            self.pair_left[x] = rx;
                            self.pair_right[rx] = x;
                        }
                        return true;
                    }
                    if self.dist[w] == self.dist[u].wrapping_add(1) {
                        self.stack.push(w);
                        descended = true;
                        break;
                    }
                }
                self.cursor[u] += 1;
            }
            if !descended {
                self.dist[u] = INF;
                self.stack.pop();
                if let Some(&parent) = self.stack.last() {
                    self.cursor[parent] += 1;
                }
            }
        }
        false
    }
}

/// Convenience wrapper: maximum matching with fresh scratch and no removals.
pub fn maximum_matching(g: &Bipartite) -> Matching {
    Matcher::new().maximum(g, &vec![false; g.right_count()], None)
}
