//! GraphML writer.

use std::io::{self, Write};

use super::check_same_nodes;
use crate::graph::KeywordGraph;
use crate::kcore::CoreDecomposition;
use crate::layer::LayerReport;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Nodes `n0..` in id order carry `label`, `core` and `layer`; edges in
/// lexicographic order carry `weight`.
pub fn export_graphml<W: Write>(
    graph: &KeywordGraph,
    decomp: &CoreDecomposition,
    layers: &LayerReport,
    mut out: W,
) -> io::Result<()> {
    check_same_nodes(graph, decomp)?;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<graphml xmlns="http://graphml.graphdrawing.org/xmlns" xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance" xsi:schemaLocation="http://graphml.graphdrawing.org/xmlns http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd">"#
    )?;
    writeln!(
        out,
        r#"  <key id="label" for="node" attr.name="label" attr.type="string"/>"#
    )?;
    writeln!(
        out,
        r#"  <key id="core" for="node" attr.name="core" attr.type="int"/>"#
    )?;
    writeln!(
        out,
        r#"  <key id="layer" for="node" attr.name="layer" attr.type="string"/>"#
    )?;
    writeln!(
        out,
        r#"  <key id="weight" for="edge" attr.name="weight" attr.type="long"/>"#
    )?;
    writeln!(out, r#"  <graph id="keywords" edgedefault="undirected">"#)?;
    for v in 0..graph.node_count() {
        writeln!(out, r#"    <node id="n{v}">"#)?;
        writeln!(
            out,
            r#"      <data key="label">{}</data>"#,
            escape(graph.label(v))
        )?;
        writeln!(out, r#"      <data key="core">{}</data>"#, decomp.core_number[v])?;
        writeln!(
            out,
            r#"      <data key="layer">{}</data>"#,
            escape(layers.layer_name(v))
        )?;
        writeln!(out, "    </node>")?;
    }
    for (i, j, w) in graph.edges() {
        writeln!(out, r#"    <edge source="n{i}" target="n{j}">"#)?;
        writeln!(out, r#"      <data key="weight">{w}</data>"#)?;
        writeln!(out, "    </edge>")?;
    }
    writeln!(out, "  </graph>")?;
    writeln!(out, "</graphml>")
}
