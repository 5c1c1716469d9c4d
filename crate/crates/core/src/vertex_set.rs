use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::VertexId;

/// Fixed-universe bitset of vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Returns `true` if the vertex was not yet present.
    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.0 / 64, v.0 % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.0 / 64, v.0 % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.universe && self.words[v.0 / 64] & (1 << (v.0 % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(core::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(VertexId(i * 64 + bit))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iterate_and_count() {
        let mut s = VertexSet::new(130);
        for v in [129, 0, 64, 3, 64] {
            s.insert(VertexId(v));
        }
        assert_eq!(s.len(), 4);
        let got: Vec<usize> = s.iter().map(|v| v.0).collect();
        assert_eq!(got, vec![0, 3, 64, 129]);
        assert!(s.remove(VertexId(3)));
        assert!(!s.contains(VertexId(3)));
        assert!(!s.contains(VertexId(500)));
    }

    #[test]
    fn subset_and_intersection() {
        let mut a = VertexSet::new(10);
        let mut b = VertexSet::new(10);
        a.insert(VertexId(1));
        b.insert(VertexId(1));
        b.insert(VertexId(7));
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection_len(&b), 1);
        a.union_with(&b);
        assert_eq!(a, b);
    }
}
