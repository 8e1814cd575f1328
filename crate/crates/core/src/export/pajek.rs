//! Pajek `.net` networks and `.clu` partitions.

use std::io::{self, BufRead, Write};

use super::{check_same_nodes, ReadError};
use crate::graph::KeywordGraph;
use crate::kcore::CoreDecomposition;

/// `*Vertices N`, quoted labels with 1-based ids, then `*Edges` as `i j w`.
///
/// Pajek has no quote escape, so `"` inside a label is written as `'`.
pub fn export_pajek<W: Write>(graph: &KeywordGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "*Vertices {}", graph.node_count())?;
    for (v, label) in graph.labels().iter().enumerate() {
        writeln!(out, "{} \"{}\"", v + 1, label.replace('"', "'"))?;
    }
    writeln!(out, "*Edges")?;
    for (i, j, w) in graph.edges() {
        writeln!(out, "{} {} {}", i + 1, j + 1, w)?;
    }
    Ok(())
}

/// Partition file with one core number per vertex line.
pub fn export_pajek_partition<W: Write>(
    graph: &KeywordGraph,
    decomp: &CoreDecomposition,
    mut out: W,
) -> io::Result<()> {
    check_same_nodes(graph, decomp)?;
    writeln!(out, "*Vertices {}", decomp.node_count())?;
    for k in &decomp.core_number {
        writeln!(out, "{k}")?;
    }
    Ok(())
}

/// Reads the undirected `.net` subset written by [`export_pajek`]:
/// `*Vertices`, optional quoted labels, and `*Edges` with optional weights.
/// Vertices without a line are labelled by their 1-based id.
pub fn read_pajek<R: BufRead>(input: R) -> Result<KeywordGraph, ReadError> {
    let mut labels: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    let mut in_edges = false;

    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(section) = line.strip_prefix('*') {
            let mut parts = section.split_whitespace();
            match parts.next().map(str::to_ascii_lowercase).as_deref() {
                Some("vertices") => {
                    let n: usize = parts
                        .next()
                        .and_then(|n| n.parse().ok())
                        .ok_or_else(|| ReadError::syntax(line_no, "bad *Vertices count"))?;
                    labels = Some((1..=n).map(|i| i.to_string()).collect());
                    in_edges = false;
                }
                Some("edges") if labels.is_some() => in_edges = true,
                _ => {
                    return Err(ReadError::syntax(
                        line_no,
                        format!("unsupported section {line:?}"),
                    ))
                }
            }
            continue;
        }
        let Some(labels) = labels.as_mut() else {
            return Err(ReadError::syntax(line_no, "data before *Vertices"));
        };
        let n = labels.len();
        let (id, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let id = parse_id(id, n, line_no)?;
        if in_edges {
            let mut fields = rest.split_whitespace();
            let other = fields
                .next()
                .ok_or_else(|| ReadError::syntax(line_no, "edge needs two endpoints"))?;
            let other = parse_id(other, n, line_no)?;
            let weight = match fields.next() {
                None => 1,
                Some(w) => w
                    .parse()
                    .map_err(|_| ReadError::syntax(line_no, format!("bad weight {w:?}")))?,
            };
            edges.push((id, other, weight));
        } else {
            let rest = rest.trim();
            if let Some(quoted) = rest.strip_prefix('"') {
                let end = quoted
                    .find('"')
                    .ok_or_else(|| ReadError::syntax(line_no, "unterminated label"))?;
                labels[id] = quoted[..end].to_owned();
            } else if let Some(word) = rest.split_whitespace().next() {
                labels[id] = word.to_owned();
            }
        }
    }

    let labels = labels.unwrap_or_default();
    Ok(KeywordGraph::from_edges(labels, edges)?)
}

fn parse_id(token: &str, n: usize, line_no: usize) -> Result<usize, ReadError> {
    match token.parse::<usize>() {
        Ok(id) if (1..=n).contains(&id) => Ok(id - 1),
        _ => Err(ReadError::syntax(
            line_no,
            format!("vertex id {token:?} outside 1..={n}"),
        )),
    }
}
