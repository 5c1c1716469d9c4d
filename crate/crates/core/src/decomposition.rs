//! Connection components of hyperforests and hypergraphs.
//!
//! In an independent edge set `W`, a subset `A` is tight when it covers
//! exactly `|A| + q - 1` vertices. Tight sets that share an edge have a
//! tight union, so the maximal tight sets partition `W`; these are the
//! components. Two edges lie in the same component iff some tight set holds
//! both, which a min cut decides exactly: with both edges forced to the
//! source side, the cut of the edge/vertex network equals
//! `|W| + min (|Γ A| - |A|)` over all `A` containing them.
//!
//! Every edge outside a skeleton closes a circuit inside exactly one
//! component; that component absorbs it as a link.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::greedy::{basis_in_order, GreedyOptions};
use crate::hypergraph::{EdgeId, EdgeSubset, Hypergraph};
use crate::independence::{extend_check_fast, is_independent, RemovalMode};
use crate::matching::FlowNetwork;
use crate::vertex_set::VertexSet;

/// Size cap for [`components_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 15;

/// Partition of a skeleton into components `T_i`, optionally with the
/// remaining edges assigned as links `H_i`.
///
/// Parts are ordered by their smallest edge id; edges inside a part are
/// ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPartition {
    parts: Vec<Vec<EdgeId>>,
    vertex_covers: Vec<VertexSet>,
    links: Vec<Vec<EdgeId>>,
    link_assignment: BTreeMap<EdgeId, usize>,
    linked: bool,
}

impl ComponentPartition {
    fn from_parts(h: &Hypergraph, mut parts: Vec<Vec<EdgeId>>) -> Result<Self> {
        for p in parts.iter_mut() {
            p.sort_unstable();
        }
        parts.sort_by_key(|p| p[0]);
        let vertex_covers = parts
            .iter()
            .map(|p| h.gamma(p))
            .collect::<Result<Vec<_>>>()?;
        let links = vec![Vec::new(); parts.len()];
        Ok(ComponentPartition {
            parts,
            vertex_covers,
            links,
            link_assignment: BTreeMap::new(),
            linked: false,
        })
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Skeleton edges `T_i` of every component.
    pub fn parts(&self) -> &[Vec<EdgeId>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[EdgeId] {
        &self.parts[i]
    }

    pub fn vertex_cover(&self, i: usize) -> &VertexSet {
        &self.vertex_covers[i]
    }

    /// Links `H_i`, ascending. Empty until links are classified.
    pub fn links(&self, i: usize) -> &[EdgeId] {
        &self.links[i]
    }

    pub fn link_assignment(&self) -> &BTreeMap<EdgeId, usize> {
        &self.link_assignment
    }

    pub fn has_links_classified(&self) -> bool {
        self.linked
    }

    /// `D_i = T_i + H_i`, ascending.
    pub fn induced(&self, i: usize) -> Vec<EdgeId> {
        let mut all = self.parts[i].clone();
        all.extend_from_slice(&self.links[i]);
        all.sort_unstable();
        all
    }

    /// The partition `D_1 .. D_b` of the edge set, each ascending, ordered
    /// by smallest member. Independent of which skeleton produced it.
    pub fn edge_partition(&self) -> Vec<Vec<EdgeId>> {
        let mut out: Vec<Vec<EdgeId>> = (0..self.len()).map(|i| self.induced(i)).collect();
        out.sort_by_key(|p| p[0]);
        out
    }

    /// Component holding skeleton edge `e`.
    pub fn part_of(&self, e: EdgeId) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&e).is_ok())
    }
}

fn normalized_forest(h: &Hypergraph, w: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let mut ids = w.to_vec();
    ids.sort_unstable();
    ids.dedup();
    for &e in &ids {
        h.check_edge(e)?;
    }
    Ok(ids)
}

/// `min (|Γ A| - |A|)` over `A ⊆ w` containing both `a` and `b`, by max flow.
///
/// Network: source → edge (capacity 1, or BIG for `a` and `b`), edge → each
/// of its vertices (BIG), vertex → sink (1). BIG exceeds any cut that keeps
/// the forced arcs, so the minimum cut is `|w| + min (|Γ A| - |A|)`.
pub fn tight_pair_value(h: &Hypergraph, w: &[EdgeId], a: EdgeId, b: EdgeId) -> Result<i64> {
    let ids = normalized_forest(h, w)?;
    for e in [a, b] {
        if ids.binary_search(&e).is_err() {
            return Err(Error::EdgeNotInForest(e));
        }
    }
    let covered = h.gamma(&ids)?.to_vec();
    let (source, sink) = (0, 1);
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |j: usize| 2 + ids.len() + j;
    let big = (ids.len() + covered.len() + 1) as u64;
    let mut net = FlowNetwork::new(2 + ids.len() + covered.len(), source, sink)?;
    for (i, &e) in ids.iter().enumerate() {
        let cap = if e == a || e == b { big } else { 1 };
        net.add_arc(source, edge_node(i), cap)?;
        for v in h.vertices(e) {
            let j = covered.binary_search(v).unwrap_or_else(|_| unreachable!());
            net.add_arc(edge_node(i), vertex_node(j), big)?;
        }
    }
    for j in 0..covered.len() {
        net.add_arc(vertex_node(j), sink, 1)?;
    }
    Ok(net.max_flow() as i64 - ids.len() as i64)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Components of the independent set `w` (parts only, no links).
///
/// Only pairs sharing a vertex are tested: a tight set is connected, so
/// merging adjacent tight pairs reaches every pair in a component.
pub fn components(h: &Hypergraph, w: &[EdgeId]) -> Result<ComponentPartition> {
    let ids = normalized_forest(h, w)?;
    if !is_independent(h, &ids)?.independent {
        return Err(Error::NotIndependent);
    }
    let q = h.q() as i64;
    let n = ids.len();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    for (i, &e) in ids.iter().enumerate() {
        for v in h.vertices(e) {
            by_vertex[v.0].push(i);
        }
    }
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        let mut neighbours: Vec<usize> = h
            .vertices(ids[i])
            .iter()
            .flat_map(|v| by_vertex[v.0].iter().copied())
            .filter(|&j| j > i)
            .collect();
        neighbours.sort_unstable();
        neighbours.dedup();
        for j in neighbours {
            if uf.find(i) == uf.find(j) {
                continue;
            }
            if tight_pair_value(h, &ids, ids[i], ids[j])? == q - 1 {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for (i, &e) in ids.iter().enumerate() {
        let root = uf.find(i);
        groups.entry(root).or_default().push(e);
    }
    ComponentPartition::from_parts(h, groups.into_values().collect())
}

/// Components by enumerating every subset of `w` and keeping the maximal
/// tight ones. Exponential; for verification.
pub fn components_bruteforce(h: &Hypergraph, w: &[EdgeId]) -> Result<ComponentPartition> {
    let ids = normalized_forest(h, w)?;
    let n = ids.len();
    if n > BRUTEFORCE_CAP {
        return Err(Error::SubsetTooLargeForExhaustiveOracle {
            size: n,
            cap: BRUTEFORCE_CAP,
        });
    }
    let q = h.q();
    let mut seen = vec![0u32; h.vertex_count()];
    let mut tight: Vec<u32> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let mut covered = 0;
        for (i, &e) in ids.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for v in h.vertices(e) {
                    if seen[v.0] != mask {
                        seen[v.0] = mask;
                        covered += 1;
                    }
                }
            }
        }
        let k = mask.count_ones() as usize;
        if covered + 1 < k + q {
            return Err(Error::NotIndependent);
        }
        if covered + 1 == k + q {
            tight.push(mask);
        }
    }
    tight.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u32> = Vec::new();
    for m in tight {
        if !maximal.iter().any(|&big| m & !big == 0) {
            maximal.push(m);
        }
    }
    for (i, &a) in maximal.iter().enumerate() {
        if maximal[i + 1..].iter().any(|&b| a & b != 0) {
            return Err(Error::NotIndependent);
        }
    }
    let parts = maximal
        .into_iter()
        .map(|m| {
            (0..n)
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| ids[i])
                .collect()
        })
        .collect();
    ComponentPartition::from_parts(h, parts)
}

/// Assigns every edge of `h` outside the skeleton `w` to the single
/// component whose edges together with it are dependent.
pub fn classify_links(
    h: &Hypergraph,
    w: &[EdgeId],
    mut parts: ComponentPartition,
) -> Result<ComponentPartition> {
    let ids = normalized_forest(h, w)?;
    let subsets = parts
        .parts
        .iter()
        .map(|p| EdgeSubset::from_edges(h, p))
        .collect::<Result<Vec<_>>>()?;
    let mut links = vec![Vec::new(); parts.len()];
    let mut assignment = BTreeMap::new();
    for d in h.edge_ids() {
        if ids.binary_search(&d).is_ok() {
            continue;
        }
        let own = h.edge_set(d);
        let mut candidates = Vec::new();
        for (i, t) in subsets.iter().enumerate() {
            if !own.is_subset(t.covered()) {
                continue;
            }
            if !extend_check_fast(h, t, d, RemovalMode::Single)?.independent() {
                candidates.push(i);
            }
        }
        match candidates[..] {
            [i] => {
                links[i].push(d);
                assignment.insert(d, i);
            }
            _ => {
                return Err(Error::LinkAmbiguity {
                    edge: d,
                    candidates: candidates.len(),
                })
            }
        }
    }
    parts.links = links;
    parts.link_assignment = assignment;
    parts.linked = true;
    Ok(parts)
}

/// Components `D_1 .. D_b` of the whole hypergraph, via the skeleton taken
/// greedily in edge-id order.
pub fn hypergraph_components(h: &Hypergraph) -> Result<ComponentPartition> {
    let order: Vec<EdgeId> = h.edge_ids().collect();
    let skeleton = basis_in_order(h, &order, &GreedyOptions::default())?;
    components_for_basis(h, skeleton.edges().members())
}

/// Components of `h` computed from the given skeleton.
pub fn components_for_basis(h: &Hypergraph, basis: &[EdgeId]) -> Result<ComponentPartition> {
    let parts = components(h, basis)?;
    classify_links(h, basis, parts)
}
