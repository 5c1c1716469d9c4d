//! Cross-oracle sweeps over seeded random instances.
//!
//! Each check compares two independent routes to the same answer and
//! counts comparisons and disagreements.

use std::fmt::Write as _;
use std::thread;

use hyperspan_core::{
    components, components_bruteforce, components_for_basis, extend_check_fast, is_independent,
    is_independent_definition, is_independent_matching, is_tight, optimal_skeleton,
    optimal_skeleton_with, skeleton_cardinality_bound, EdgeId, EdgeSubset, GreedyOptions,
    Hypergraph, Objective, RemovalMode,
};

use crate::testkit::{
    enumerate_bases, independence_table, kruskal_mst, mask_edges, random_hypergraph, sweep_config,
    TestkitError,
};

/// Largest edge count the sweeps accept (they enumerate subsets).
pub const MAX_SWEEP_EDGES: usize = 12;

/// Deliberate defects for exercising the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negates every accelerated extension verdict.
    FlipFastCheck,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }

    fn add(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Definition, full matching, and incremental oracles on every nonempty
/// subset.
pub fn check_oracles(h: &Hypergraph) -> Result<Tally, TestkitError> {
    let mut t = Tally::default();
    for mask in 1usize..(1 << h.edge_count()) {
        let a = mask_edges(mask);
        let def = is_independent_definition(h, &a)?.independent;
        let full = is_independent_matching(h, &a)?.independent;
        let inc = is_independent(h, &a)?.independent;
        t.record(def == full && def == inc);
    }
    Ok(t)
}

/// For every independent `w` and `a ∉ w`, the accelerated test in both
/// removal modes against the full matching oracle on `w + a`.
pub fn check_fast_extension(h: &Hypergraph, fault: Option<Fault>) -> Result<Tally, TestkitError> {
    let table = independence_table(h)?;
    let mut t = Tally::default();
    for (mask, _) in table.iter().enumerate().filter(|(_, &ok)| ok) {
        let w = EdgeSubset::from_edges(h, &mask_edges(mask))?;
        for a in h.edge_ids().filter(|&a| mask & (1 << a.0) == 0) {
            let full = is_independent_matching(h, &mask_edges(mask | 1 << a.0))?.independent;
            for mode in [RemovalMode::Single, RemovalMode::Strict] {
                let mut fast = extend_check_fast(h, &w, a, mode)?.independent();
                if fault == Some(Fault::FlipFastCheck) {
                    fast = !fast;
                }
                t.record(fast == full);
            }
        }
    }
    Ok(t)
}

/// Hereditary and exchange axioms over the independent sets.
pub fn check_axioms(h: &Hypergraph) -> Result<Tally, TestkitError> {
    let table = independence_table(h)?;
    let m = h.edge_count();
    let independent: Vec<usize> = (0usize..(1 << m)).filter(|&s| table[s]).collect();
    let mut t = Tally::default();
    for &b in &independent {
        // every one-smaller subset suffices for the hereditary property
        let hereditary = (0..m).filter(|i| b & (1 << i) != 0).all(|i| {
            is_independent_matching(h, &mask_edges(b & !(1 << i))).is_ok_and(|v| v.independent)
        });
        t.record(hereditary);
        for &a in &independent {
            if a.count_ones() + 1 != b.count_ones() {
                continue;
            }
            let extra = b & !a;
            let exchange = (0..m)
                .filter(|i| extra & (1 << i) != 0)
                .any(|i| table[a | 1 << i]);
            t.record(exchange);
        }
    }
    Ok(t)
}

/// Greedy against exhaustive basis enumeration for both objectives, plus
/// spanning, call budget, mode equivalence, and trace replay.
pub fn check_greedy(h: &Hypergraph) -> Result<Tally, TestkitError> {
    let bases = enumerate_bases(h)?;
    let weights: Vec<f64> = bases
        .iter()
        .map(|b| h.subset_weight(b))
        .collect::<Result<_, _>>()?;
    let mut t = Tally::default();
    t.record(bases.iter().all(|b| b.len() == bases[0].len()));
    for objective in [Objective::Minimize, Objective::Maximize] {
        let s = optimal_skeleton(h, objective);
        let best = match objective {
            Objective::Minimize => weights.iter().copied().fold(f64::INFINITY, f64::min),
            Objective::Maximize => weights.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        };
        t.record((s.total_weight() - best).abs() <= 1e-9);
        t.record(s.edges().len() == bases[0].len());
        t.record(bases.iter().any(|b| b.as_slice() == s.edges().members()));
        t.record(s.edges().covered() == &h.covered_vertices());
        t.record(s.matching_calls() <= h.edge_count());
        for (removals, incremental) in [
            (RemovalMode::Single, true),
            (RemovalMode::Strict, false),
            (RemovalMode::Strict, true),
        ] {
            let other = optimal_skeleton_with(
                h,
                &GreedyOptions {
                    objective,
                    removals,
                    incremental,
                },
            );
            let same = other.edges() == s.edges()
                && other
                    .trace()
                    .iter()
                    .zip(s.trace())
                    .all(|(x, y)| x.edge == y.edge && x.decision == y.decision);
            t.record(same);
        }
        // replay every decision against the full matching oracle
        let mut accepted: Vec<EdgeId> = Vec::new();
        let mut replay_ok = true;
        for entry in s.trace() {
            let mut candidate = accepted.clone();
            candidate.push(entry.edge);
            let full = is_independent_matching(h, &candidate)?.independent;
            replay_ok &= full == entry.decision.accepted();
            if full {
                accepted = candidate;
            }
        }
        t.record(replay_ok);
    }
    Ok(t)
}

/// On 2-uniform instances: greedy weight equals Kruskal's exactly, and the
/// edge sets coincide when weights are distinct.
pub fn check_kruskal(h: &Hypergraph) -> Result<Tally, TestkitError> {
    let mut t = Tally::default();
    if h.q() != 2 {
        return Ok(t);
    }
    let (tree, weight) = kruskal_mst(h)?;
    let s = optimal_skeleton(h, Objective::Minimize);
    t.record((s.total_weight() - weight).abs() <= 1e-9);
    let mut sorted = h.weights().to_vec();
    sorted.sort_by(f64::total_cmp);
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    if distinct {
        t.record(s.edges().members() == tree.as_slice());
    }
    Ok(t)
}

/// Fast components against the brute-force maximal tight sets, tightness
/// of parts, non-tightness of pairwise unions, and the cardinality bound.
pub fn check_components(h: &Hypergraph, forest: &[EdgeId]) -> Result<Tally, TestkitError> {
    let mut t = Tally::default();
    let fast = components(h, forest)?;
    let brute = components_bruteforce(h, forest)?;
    t.record(fast == brute);
    for i in 0..fast.len() {
        t.record(is_tight(h, fast.part(i))?);
        for j in i + 1..fast.len() {
            let mut union = fast.part(i).to_vec();
            union.extend_from_slice(fast.part(j));
            t.record(!is_tight(h, &union)?);
        }
    }
    let mut s = optimal_skeleton(h, Objective::Minimize);
    s.compute_components(h)?;
    t.record(skeleton_cardinality_bound(h, &s)?);
    Ok(t)
}

/// The partition `D_1 .. D_b` computed from every basis is the same.
pub fn check_invariance(h: &Hypergraph) -> Result<Tally, TestkitError> {
    let mut t = Tally::default();
    let bases = enumerate_bases(h)?;
    let reference = components_for_basis(h, &bases[0])?.edge_partition();
    for b in &bases[1..] {
        t.record(components_for_basis(h, b)?.edge_partition() == reference);
    }
    Ok(t)
}

pub const CHECK_NAMES: [&str; 7] = [
    "oracle",
    "fast_check",
    "axioms",
    "greedy",
    "kruskal",
    "components",
    "invariance",
];

/// All checks for one instance, in [`CHECK_NAMES`] order.
pub fn check_instance(h: &Hypergraph, fault: Option<Fault>) -> Result<[Tally; 7], TestkitError> {
    let skeleton = optimal_skeleton(h, Objective::Minimize);
    Ok([
        check_oracles(h)?,
        check_fast_extension(h, fault)?,
        check_axioms(h)?,
        check_greedy(h)?,
        check_kruskal(h)?,
        check_components(h, skeleton.edges().members())?,
        check_invariance(h)?,
    ])
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: u64,
    pub q: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub threads: usize,
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub instances: u64,
    pub passed: u64,
    pub tallies: [Tally; 7],
    /// Instance indices that failed any check, ascending.
    pub failures: Vec<u64>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.passed == self.instances
    }

    pub fn text(&self) -> String {
        let mut out = format!("{}/{} ok\n", self.passed, self.instances);
        for (name, t) in CHECK_NAMES.iter().zip(&self.tallies) {
            writeln!(out, "{name}: {} checks, {} failed", t.checked, t.failed).unwrap();
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("check,checked,failed\n");
        for (name, t) in CHECK_NAMES.iter().zip(&self.tallies) {
            writeln!(out, "{name},{},{}", t.checked, t.failed).unwrap();
        }
        writeln!(
            out,
            "instances,{},{}",
            self.instances,
            self.instances - self.passed
        )
        .unwrap();
        out
    }
}

/// Runs the sweep, fanning instances out over `threads` workers and
/// aggregating in instance order.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, TestkitError> {
    if cfg.max_edges > MAX_SWEEP_EDGES {
        return Err(TestkitError::TooLarge {
            edges: cfg.max_edges,
            limit: MAX_SWEEP_EDGES,
        });
    }
    let threads = cfg.threads.max(1);
    let run_one = |i: u64| -> Result<[Tally; 7], TestkitError> {
        let gen = sweep_config(cfg.seed, i, cfg.q, cfg.max_vertices, cfg.max_edges);
        let h = random_hypergraph(&gen)?;
        check_instance(&h, cfg.fault)
    };
    let mut results: Vec<Option<Result<[Tally; 7], TestkitError>>> = vec![None; cfg.count as usize];
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads as u64)
            .map(|w| {
                scope.spawn(move || {
                    (w..cfg.count)
                        .step_by(threads)
                        .map(|i| (i, run_one(i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for worker in workers {
            for (i, r) in worker.join().expect("verify worker panicked") {
                results[i as usize] = Some(r);
            }
        }
    });
    let mut report = VerifyReport {
        instances: cfg.count,
        passed: 0,
        tallies: [Tally::default(); 7],
        failures: Vec::new(),
    };
    for (i, r) in results.into_iter().enumerate() {
        let tallies = r.expect("every instance ran")?;
        for (acc, t) in report.tallies.iter_mut().zip(tallies) {
            acc.add(t);
        }
        if tallies.iter().all(Tally::ok) {
            report.passed += 1;
        } else {
            report.failures.push(i as u64);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(count: u64, fault: Option<Fault>) -> VerifyConfig {
        VerifyConfig {
            seed: 7,
            count,
            q: 3,
            max_vertices: 7,
            max_edges: 6,
            threads: 3,
            fault,
        }
    }

    #[test]
    fn clean_sweep_passes() {
        let r = run_verify(&cfg(20, None)).unwrap();
        assert_eq!(r.passed, 20);
        assert!(r.text().starts_with("20/20 ok\n"));
    }

    #[test]
    fn injected_fault_is_caught() {
        let r = run_verify(&cfg(20, Some(Fault::FlipFastCheck))).unwrap();
        assert!(!r.ok());
        assert!(r.tallies[1].failed > 0);
    }

    #[test]
    fn zero_count() {
        let r = run_verify(&cfg(0, None)).unwrap();
        assert_eq!(r.text().lines().next(), Some("0/0 ok"));
        assert!(r.ok());
    }

    #[test]
    fn thread_count_does_not_change_report() {
        let a = run_verify(&VerifyConfig {
            threads: 1,
            ..cfg(12, None)
        })
        .unwrap();
        let b = run_verify(&VerifyConfig {
            threads: 4,
            ..cfg(12, None)
        })
        .unwrap();
        assert_eq!(a, b);
    }
}
