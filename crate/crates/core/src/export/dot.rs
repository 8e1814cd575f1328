use std::io::{self, Write};

use super::check_same_nodes;
use crate::graph::KeywordGraph;
use crate::kcore::CoreDecomposition;
use crate::layer::LayerReport;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Graphviz undirected graph with `label`, `core` and `layer` node
/// attributes and a `weight` edge attribute.
pub fn export_dot<W: Write>(
    graph: &KeywordGraph,
    decomp: &CoreDecomposition,
    layers: &LayerReport,
    mut out: W,
) -> io::Result<()> {
    check_same_nodes(graph, decomp)?;
    writeln!(out, "graph keywords {{")?;
    for v in 0..graph.node_count() {
        writeln!(
            out,
            "  n{v} [label={}, core={}, layer={}];",
            quote(graph.label(v)),
            decomp.core_number[v],
            quote(layers.layer_name(v))
        )?;
    }
    for (i, j, w) in graph.edges() {
        writeln!(out, "  n{i} -- n{j} [weight={w}];")?;
    }
    writeln!(out, "}}")
}
