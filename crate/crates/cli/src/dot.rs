//! Graphviz export of the König (incidence) graph.

use std::fmt::Write as _;

use hyperspan_core::{Hypergraph, KonigGraph};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Undirected DOT graph: edge nodes as boxes ordered by label, vertex nodes
/// as circles (1-based) ordered by id, removed vertices dashed.
pub fn konig_dot(h: &Hypergraph, k: &KonigGraph) -> String {
    let mut edges: Vec<(String, usize)> = k
        .left()
        .iter()
        .enumerate()
        .map(|(i, &e)| (h.display_name(e), i))
        .collect();
    edges.sort();
    let mut out = String::from("graph konig {\n");
    for (name, _) in &edges {
        writeln!(
            out,
            "  {} [label={}, shape=box];",
            quote(&format!("e:{name}")),
            quote(name)
        )
        .unwrap();
    }
    for (j, v) in k.right().iter().enumerate() {
        let name = (v.0 + 1).to_string();
        let style = if k.removed_mask()[j] {
            ", style=dashed"
        } else {
            ""
        };
        writeln!(
            out,
            "  {} [label={}, shape=circle{style}];",
            quote(&format!("v:{name}")),
            quote(&name)
        )
        .unwrap();
    }
    for (name, i) in &edges {
        for &j in k.neighbors(*i) {
            writeln!(
                out,
                "  {} -- {};",
                quote(&format!("e:{name}")),
                quote(&format!("v:{}", k.right()[j].0 + 1))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
