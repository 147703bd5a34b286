//! Deterministic DOT rendering of orbit-quotient graphs.

use std::fmt::Write;

use orbitgames_core::{GraphKind, OrbitQuotientGraph};

/// Emits the graph in DOT form: vertices named after their least orbit
/// representative in ascending order, edges sorted, direction preserved for
/// the Becker digraph. Byte-identical across runs for identical graphs.
pub fn emit_dot(graph: &OrbitQuotientGraph) -> String {
    let reps = graph.representatives();
    let (keyword, op) = match graph.kind {
        GraphKind::Becker => ("digraph", "->"),
        GraphKind::Hjorth => ("graph", "--"),
    };
    let mut out = String::new();
    writeln!(out, "{keyword} {} {{", graph.kind).unwrap();
    for r in &reps {
        writeln!(out, "  \"{r}\";").unwrap();
    }
    let mut edges = graph.edges.clone();
    edges.sort_unstable();
    for (u, v) in edges {
        writeln!(out, "  \"{}\" {op} \"{}\";", reps[u], reps[v]).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
