//! Seeded instance generators and exhaustive oracles.
//!
//! The generator uses `ChaCha8Rng` (from `rand_chacha`) seeded with
//! `seed_from_u64`, so a seed names the same instance on every platform.

use std::collections::HashSet;

use hyperspan_core::{greedy_order, EdgeId, Hypergraph, Objective};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest edge count [`enumerate_bases`] accepts.
pub const ENUMERATION_LIMIT: usize = 18;

/// Up to this many q-subsets the generator samples by index from the full
/// list instead of rejection sampling.
const DENSE_SAMPLING_LIMIT: u128 = 200_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TestkitError {
    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
    #[error("{edges} edges exceed the enumeration limit {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("Kruskal needs a 2-uniform hypergraph, got q = {0}")]
    NotTwoUniform(usize),
    #[error(transparent)]
    Core(#[from] hyperspan_core::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub q: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub weight_range: (f64, f64),
    /// Assign pairwise distinct weights (a shuffled increasing sequence).
    pub distinct_weights: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            q: 3,
            vertex_count: 6,
            edge_count: 5,
            weight_range: (0.0, 10.0),
            distinct_weights: false,
        }
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        loop {
            let rest = binomial(n - next - 1, k - slot - 1);
            if rank < rest {
                out.push(next);
                next += 1;
                break;
            }
            rank -= rest;
            next += 1;
        }
    }
    out
}

impl GenConfig {
    fn validate(&self) -> Result<(), TestkitError> {
        let bad = |m: &str| Err(TestkitError::InfeasibleConfig(m.to_string()));
        let (lo, hi) = self.weight_range;
        if self.q < 2 {
            return bad("q must be at least 2");
        }
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo > hi {
            return bad("weight range must satisfy 0 <= lo <= hi");
        }
        if self.distinct_weights && self.edge_count > 1 && lo == hi {
            return bad("distinct weights need lo < hi");
        }
        if self.edge_count as u128 > binomial(self.vertex_count, self.q) {
            return Err(TestkitError::InfeasibleConfig(format!(
                "{} edges but only C({}, {}) = {} distinct q-subsets",
                self.edge_count,
                self.vertex_count,
                self.q,
                binomial(self.vertex_count, self.q)
            )));
        }
        Ok(())
    }
}

/// Deterministic random hypergraph: distinct q-subsets, labels `e1..eN`.
pub fn random_hypergraph(cfg: &GenConfig) -> Result<Hypergraph, TestkitError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (n, q, m) = (cfg.vertex_count, cfg.q, cfg.edge_count);
    let total = binomial(n, q);
    let edges: Vec<Vec<usize>> = if total <= DENSE_SAMPLING_LIMIT {
        index::sample(&mut rng, total as usize, m)
            .into_iter()
            .map(|r| unrank_combination(n, q, r as u128))
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let mut e = index::sample(&mut rng, n, q).into_vec();
            e.sort_unstable();
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
        out
    };
    let (lo, hi) = cfg.weight_range;
    let weights: Vec<f64> = if cfg.distinct_weights {
        let step = (hi - lo) / (m as f64 + 1.0);
        let mut w: Vec<f64> = (1..=m).map(|k| lo + step * k as f64).collect();
        w.shuffle(&mut rng);
        w
    } else {
        (0..m).map(|_| rng.gen_range(lo..=hi)).collect()
    };
    let labels = (1..=m).map(|i| format!("e{i}")).collect();
    Ok(Hypergraph::new(q, n, edges, weights)?.with_labels(labels)?)
}

/// Independence of every edge subset, indexed by bitmask, decided straight
/// from the covering inequality: a set is independent iff all its
/// one-smaller subsets are and it covers at least `|A| + q - 1` vertices.
pub fn independence_table(h: &Hypergraph) -> Result<Vec<bool>, TestkitError> {
    let m = h.edge_count();
    if m > ENUMERATION_LIMIT {
        return Err(TestkitError::TooLarge {
            edges: m,
            limit: ENUMERATION_LIMIT,
        });
    }
    let q = h.q();
    let mut independent = vec![false; 1 << m];
    let mut seen = vec![0usize; h.vertex_count()];
    independent[0] = true;
    for mask in 1usize..(1 << m) {
        let members: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if !members.iter().all(|&i| independent[mask & !(1 << i)]) {
            continue;
        }
        let mut covered = 0;
        for &i in &members {
            for v in h.vertices(EdgeId(i)) {
                if seen[v.0] != mask {
                    seen[v.0] = mask;
                    covered += 1;
                }
            }
        }
        independent[mask] = covered + 1 >= members.len() + q;
    }
    Ok(independent)
}

/// Edge ids of a bitmask, ascending.
pub fn mask_edges(mask: usize) -> Vec<EdgeId> {
    (0..usize::BITS as usize)
        .filter(|i| mask & (1 << i) != 0)
        .map(EdgeId)
        .collect()
}

/// Every maximal independent edge set, each ascending, in lexicographic
/// order.
pub fn enumerate_bases(h: &Hypergraph) -> Result<Vec<Vec<EdgeId>>, TestkitError> {
    let independent = independence_table(h)?;
    let m = h.edge_count();
    let mut bases: Vec<Vec<EdgeId>> = (0usize..(1 << m))
        .filter(|&mask| independent[mask])
        .filter(|&mask| (0..m).all(|i| mask & (1 << i) != 0 || !independent[mask | (1 << i)]))
        .map(mask_edges)
        .collect();
    bases.sort();
    Ok(bases)
}

/// Classical Kruskal minimum spanning forest of a 2-uniform hypergraph with
/// the same (weight, id) order as the greedy skeleton.
pub fn kruskal_mst(h: &Hypergraph) -> Result<(Vec<EdgeId>, f64), TestkitError> {
    if h.q() != 2 {
        return Err(TestkitError::NotTwoUniform(h.q()));
    }
    let mut parent: Vec<usize> = (0..h.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = Vec::new();
    for e in greedy_order(h, Objective::Minimize) {
        let v = h.vertices(e);
        let (a, b) = (find(&mut parent, v[0].0), find(&mut parent, v[1].0));
        if a != b {
            parent[a] = b;
            tree.push(e);
        }
    }
    tree.sort_unstable();
    let weight = h.subset_weight(&tree)?;
    Ok((tree, weight))
}

/// A random instance together with a hyperforest inside it: the first
/// `max_size` edges of its minimum skeleton (or all of it).
pub fn random_hyperforest(
    cfg: &GenConfig,
    max_size: usize,
) -> Result<(Hypergraph, Vec<EdgeId>), TestkitError> {
    let h = random_hypergraph(cfg)?;
    let skeleton = hyperspan_core::optimal_skeleton(&h, Objective::Minimize);
    let mut forest: Vec<EdgeId> = skeleton
        .trace()
        .iter()
        .filter(|t| t.decision.accepted())
        .map(|t| t.edge)
        .take(max_size)
        .collect();
    forest.sort_unstable();
    Ok((h, forest))
}

/// Deterministic per-instance configuration for sweeps: instance `index`
/// under `seed` draws its vertex and edge counts from the sweep RNG.
pub fn sweep_config(
    seed: u64,
    index: u64,
    q: usize,
    max_vertices: usize,
    max_edges: usize,
) -> GenConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let vertex_count = rng.gen_range(q..=max_vertices.max(q));
    let cap = binomial(vertex_count, q).min(max_edges as u128) as usize;
    let edge_count = rng.gen_range(0..=cap);
    GenConfig {
        seed: rng.gen(),
        q,
        vertex_count,
        edge_count,
        weight_range: (0.0, 10.0),
        distinct_weights: rng.gen_bool(0.5),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_instance;

    fn ids(v: &[usize]) -> Vec<EdgeId> {
        v.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn binomials_and_unranking() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(1000, 3), 166_167_000);
        assert_eq!(unrank_combination(4, 2, 0), vec![0, 1]);
        assert_eq!(unrank_combination(4, 2, 5), vec![2, 3]);
        let all: Vec<_> = (0..10).map(|r| unrank_combination(5, 3, r)).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn generator_is_deterministic() {
        let cfg = GenConfig {
            seed: 1,
            q: 2,
            vertex_count: 5,
            edge_count: 4,
            ..Default::default()
        };
        let a = write_instance(&random_hypergraph(&cfg).unwrap());
        let b = write_instance(&random_hypergraph(&cfg).unwrap());
        assert_eq!(a, b);
        let other = GenConfig { seed: 2, ..cfg };
        assert_ne!(a, write_instance(&random_hypergraph(&other).unwrap()));
    }

    #[test]
    fn infeasible_configs() {
        let cfg = GenConfig {
            q: 3,
            vertex_count: 4,
            edge_count: 5,
            ..Default::default()
        };
        assert!(matches!(
            random_hypergraph(&cfg),
            Err(TestkitError::InfeasibleConfig(_))
        ));
        let cfg = GenConfig {
            weight_range: (-1.0, 1.0),
            ..Default::default()
        };
        assert!(random_hypergraph(&cfg).is_err());
    }

    #[test]
    fn generated_instances_validate() {
        let cfg = GenConfig {
            q: 3,
            vertex_count: 6,
            edge_count: 5,
            ..Default::default()
        };
        let h = random_hypergraph(&cfg).unwrap();
        assert_eq!(h.edge_count(), 5);
        let mut sets: Vec<_> = h.edge_ids().map(|e| h.vertices(e).to_vec()).collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), 5);
    }

    #[test]
    fn sparse_sampling_path() {
        let cfg = GenConfig {
            q: 3,
            vertex_count: 200,
            edge_count: 300,
            distinct_weights: true,
            ..Default::default()
        };
        let h = random_hypergraph(&cfg).unwrap();
        let mut w = h.weights().to_vec();
        w.sort_by(f64::total_cmp);
        w.dedup();
        assert_eq!(w.len(), 300);
    }

    #[test]
    fn bases_of_worked_instance() {
        let h = Hypergraph::new(
            3,
            5,
            vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 1, 3], vec![0, 3, 4]],
            vec![1.0, 2.0, 3.0, 4.0],
        )
        .unwrap();
        let bases = enumerate_bases(&h).unwrap();
        assert!(bases.contains(&ids(&[0, 1, 2])));
        assert!(bases.contains(&ids(&[0, 1, 3])));
        assert!(bases.iter().all(|b| b.len() == 3));
        assert!(!bases.contains(&ids(&[0, 1, 2, 3])));
    }

    #[test]
    fn bases_small_cases() {
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]], vec![1.0]).unwrap();
        assert_eq!(enumerate_bases(&single).unwrap(), vec![ids(&[0])]);
        let triangle =
            Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], vec![1.0; 3]).unwrap();
        assert_eq!(
            enumerate_bases(&triangle).unwrap(),
            vec![ids(&[0, 1]), ids(&[0, 2]), ids(&[1, 2])]
        );
        let big = Hypergraph::new(
            2,
            30,
            (0..19).map(|i| vec![i, i + 1]).collect(),
            vec![1.0; 19],
        )
        .unwrap();
        assert!(matches!(
            enumerate_bases(&big),
            Err(TestkitError::TooLarge { .. })
        ));
    }

    #[test]
    fn kruskal_cases() {
        let path = Hypergraph::new(
            2,
            3,
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            vec![1.0, 2.0, 3.0],
        )
        .unwrap();
        assert_eq!(kruskal_mst(&path).unwrap(), (ids(&[0, 1]), 3.0));
        let split = Hypergraph::new(
            2,
            6,
            vec![vec![0, 1], vec![2, 3], vec![3, 4], vec![2, 4]],
            vec![1.0; 4],
        )
        .unwrap();
        let (tree, _) = kruskal_mst(&split).unwrap();
        assert_eq!(tree, ids(&[0, 1, 2]));
        let three = Hypergraph::new(3, 3, vec![vec![0, 1, 2]], vec![1.0]).unwrap();
        assert_eq!(kruskal_mst(&three), Err(TestkitError::NotTwoUniform(3)));
    }
}
