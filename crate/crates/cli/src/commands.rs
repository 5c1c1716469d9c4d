//! Subcommand bodies. Each returns the text it would print and an exit
//! code, so `main` stays a thin shell and tests can call them directly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hyperspan_core::{
    build_konig, is_independent, is_tight, optimal_skeleton_with, EdgeId, GreedyOptions,
    Hypergraph, Objective, RemovalMode, VertexId, Witness,
};

use crate::bench::{bench_row, default_vertices, BENCH_HEADER};
use crate::dot::konig_dot;
use crate::format::{format_weight, parse_instance};
use crate::verify::{run_verify, Fault, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEPENDENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

macro_rules! try_input {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::input_error(err),
        }
    };
}

pub fn load_instance(path: &Path) -> Result<Hypergraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_labels(h: &Hypergraph, labels: &[String]) -> Result<Vec<EdgeId>, String> {
    labels
        .iter()
        .map(|l| {
            h.find_label(l)
                .ok_or_else(|| format!("unknown edge label `{l}`"))
        })
        .collect()
}

fn names(h: &Hypergraph, edges: &[EdgeId]) -> String {
    edges
        .iter()
        .map(|&e| h.display_name(e))
        .collect::<Vec<_>>()
        .join(" ")
}

fn vertex_list(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| (v.0 + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SpanFlags {
    pub max: bool,
    pub trace: bool,
    pub strict_removals: bool,
    pub incremental: bool,
}

pub fn cmd_span(path: &Path, flags: SpanFlags) -> Outcome {
    let h = try_input!(load_instance(path));
    let options = GreedyOptions {
        objective: if flags.max {
            Objective::Maximize
        } else {
            Objective::Minimize
        },
        removals: if flags.strict_removals {
            RemovalMode::Strict
        } else {
            RemovalMode::Single
        },
        incremental: flags.incremental,
    };
    let mut skeleton = optimal_skeleton_with(&h, &options);
    let count = match skeleton.compute_components(&h) {
        Ok(parts) => parts.len(),
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = String::new();
    let edges = names(&h, skeleton.edges().members());
    writeln!(
        out,
        "edges:{}{edges}",
        if edges.is_empty() { "" } else { " " }
    )
    .unwrap();
    writeln!(out, "weight: {}", format_weight(skeleton.total_weight())).unwrap();
    writeln!(out, "components: {count}").unwrap();
    if flags.trace {
        writeln!(out, "trace:").unwrap();
        for t in skeleton.trace() {
            writeln!(
                out,
                "  {} {} calls={}",
                h.display_name(t.edge),
                t.decision.as_str(),
                t.matching_calls
            )
            .unwrap();
        }
        writeln!(out, "matching_calls: {}", skeleton.matching_calls()).unwrap();
    }
    Outcome::ok(out)
}

pub fn cmd_check(path: &Path, labels: &[String]) -> Outcome {
    let h = try_input!(load_instance(path));
    let edges = try_input!(resolve_labels(&h, labels));
    let verdict = try_input!(is_independent(&h, &edges));
    if verdict.independent {
        return Outcome::ok("independent\n".into());
    }
    let mut out = String::from("dependent\n");
    match verdict.witness {
        Some(Witness::Extension { edge, removal }) => {
            writeln!(out, "failing edge: {}", h.display_name(edge)).unwrap();
            writeln!(out, "removed: {}", vertex_list(&removal)).unwrap();
        }
        Some(Witness::Removal(removal)) => {
            writeln!(out, "removed: {}", vertex_list(&removal)).unwrap();
        }
        Some(Witness::Subset(subset)) => {
            writeln!(out, "violating subset: {}", names(&h, &subset)).unwrap();
        }
        None => {}
    }
    Outcome {
        code: EXIT_DEPENDENT,
        stdout: out,
        stderr: String::new(),
    }
}

pub fn cmd_components(path: &Path) -> Outcome {
    let h = try_input!(load_instance(path));
    let mut skeleton = optimal_skeleton_with(&h, &GreedyOptions::default());
    let parts = try_input!(skeleton.compute_components(&h)).clone();
    let mut out = String::new();
    writeln!(out, "components: {}", parts.len()).unwrap();
    for i in 0..parts.len() {
        // a part that is not tight means the decomposition is broken
        let tight = try_input!(is_tight(&h, parts.part(i)));
        assert!(tight, "component {} is not tight", i + 1);
        writeln!(out, "component {}:", i + 1).unwrap();
        writeln!(out, "  skeleton: {}", names(&h, parts.part(i))).unwrap();
        writeln!(out, "  links: {}", names(&h, parts.links(i))).unwrap();
        writeln!(out, "  vertices: {}", parts.vertex_cover(i).len()).unwrap();
    }
    Outcome::ok(out)
}

pub fn cmd_konig(path: &Path, labels: Option<&[String]>, remove: &[usize]) -> Outcome {
    let h = try_input!(load_instance(path));
    let edges = match labels {
        Some(l) => try_input!(resolve_labels(&h, l)),
        None => h.edge_ids().collect(),
    };
    let mut k = try_input!(build_konig(&h, &edges));
    let mut removed = Vec::with_capacity(remove.len());
    for &v in remove {
        if v == 0 || v > h.vertex_count() {
            return Outcome::input_error(format!(
                "vertex {v} out of range 1..={}",
                h.vertex_count()
            ));
        }
        removed.push(VertexId(v - 1));
    }
    try_input!(k.set_removed(&removed));
    Outcome::ok(konig_dot(&h, &k))
}

/// Worker count for `verify`: available parallelism, capped by
/// `HYPERSPAN_THREADS` when that parses as a positive integer.
pub fn verify_threads() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("HYPERSPAN_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
    {
        Some(cap) if cap > 0 => available.min(cap),
        _ => available,
    }
}

#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub seed: u64,
    pub count: u64,
    pub q: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub csv: bool,
    pub inject_fault: bool,
}

pub fn cmd_verify(args: &VerifyArgs) -> Outcome {
    if args.q < 2 {
        return Outcome::input_error(format!("q must be at least 2, got {}", args.q));
    }
    let cfg = VerifyConfig {
        seed: args.seed,
        count: args.count,
        q: args.q,
        max_vertices: args.max_vertices,
        max_edges: args.max_edges,
        threads: verify_threads(),
        fault: args.inject_fault.then_some(Fault::FlipFastCheck),
    };
    let report = try_input!(run_verify(&cfg));
    let mut stderr = String::new();
    for i in &report.failures {
        writeln!(stderr, "instance {i} failed").unwrap();
    }
    Outcome {
        code: if report.ok() { EXIT_OK } else { 1 },
        stdout: if args.csv {
            report.csv()
        } else {
            report.text()
        },
        stderr,
    }
}

#[derive(Debug, Clone)]
pub struct BenchArgs {
    pub sizes: Vec<usize>,
    pub q: usize,
    pub seed: u64,
    pub vertices: Option<usize>,
    pub incremental: bool,
}

pub fn cmd_bench(args: &BenchArgs) -> Outcome {
    let options = GreedyOptions {
        incremental: args.incremental,
        ..GreedyOptions::default()
    };
    let mut out = format!("{BENCH_HEADER}\n");
    for &edges in &args.sizes {
        let vertices = args
            .vertices
            .unwrap_or_else(|| default_vertices(args.q, edges));
        let row = try_input!(bench_row(args.q, vertices, edges, args.seed, &options));
        writeln!(out, "{row}").unwrap();
    }
    Outcome::ok(out)
}
