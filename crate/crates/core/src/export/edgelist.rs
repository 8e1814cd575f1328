use std::io::BufRead;

use super::ReadError;
use crate::graph::KeywordGraph;

/// Whitespace-separated `u v [weight]` lines with 0-based ids. `#` starts a
/// comment. Node count is one past the largest id seen.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<KeywordGraph, ReadError> {
    let mut edges = Vec::new();
    let mut node_count = 0usize;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || ReadError::syntax(idx + 1, format!("expected `u v [weight]`, got {line:?}"));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(bad());
        }
        let u: usize = fields[0].parse().map_err(|_| bad())?;
        let v: usize = fields[1].parse().map_err(|_| bad())?;
        let w: u64 = match fields.get(2) {
            Some(w) => w.parse().map_err(|_| bad())?,
            None => 1,
        };
        node_count = node_count.max(u + 1).max(v + 1);
        edges.push((u, v, w));
    }
    let labels = (0..node_count).map(|i| i.to_string()).collect();
    Ok(KeywordGraph::from_edges(labels, edges)?)
}
