//! Simple undirected weighted graphs in compressed adjacency form.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("matrix dimension {matrix} does not match vocabulary size {vocab}")]
    DimensionMismatch { matrix: usize, vocab: usize },
    #[error("edge ({0}, {1}) references a node outside 0..{2}")]
    NodeOutOfRange(usize, usize, usize),
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has zero weight")]
    ZeroWeight(usize, usize),
}

/// Undirected graph without self-loops or parallel edges.
///
/// Neighbor lists are sorted; `weights` is parallel to `neighbors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordGraph {
    labels: Vec<String>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    weights: Vec<u64>,
}

impl KeywordGraph {
    pub fn empty() -> Self {
        Self::with_labels(Vec::new())
    }

    /// A graph with the given node labels and no edges.
    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        KeywordGraph {
            labels,
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
            weights: Vec::new(),
        }
    }

    /// Builds a graph from undirected weighted edges. Each unordered pair may
    /// appear once, in either orientation.
    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut arcs: Vec<(u32, u32, u64)> = Vec::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NodeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if w == 0 {
                return Err(GraphError::ZeroWeight(u, v));
            }
            arcs.push((u as u32, v as u32, w));
            arcs.push((v as u32, u as u32, w));
        }
        arcs.sort_unstable_by_key(|&(u, v, _)| (u, v));
        if let Some(pair) = arcs.windows(2).find(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            let (u, v) = (pair[0].0.min(pair[0].1), pair[0].0.max(pair[0].1));
            return Err(GraphError::DuplicateEdge(u as usize, v as usize));
        }

        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = arcs.iter().map(|a| a.1).collect();
        let weights = arcs.iter().map(|a| a.2).collect();
        Ok(KeywordGraph {
            labels,
            offsets,
            neighbors,
            weights,
        })
    }

    /// Unlabeled graph; labels are the decimal node ids.
    pub fn from_unlabeled_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let labels = (0..node_count).map(|i| i.to_string()).collect();
        Self::from_edges(labels, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbor_weights(&self, v: usize) -> &[u64] {
        &self.weights[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sum of incident edge weights.
    pub fn strength(&self, v: usize) -> u64 {
        self.neighbor_weights(v).iter().sum()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        let pos = self.neighbors(u).binary_search(&(v as u32)).ok()?;
        Some(self.neighbor_weights(u)[pos])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    /// Edges `(i, j, w)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .zip(self.neighbor_weights(u))
                .filter(move |(&v, _)| v as usize > u)
                .map(move |(&v, &w)| (u, v as usize, w))
        })
    }

    /// Same structure with every edge weight set to 1.
    pub fn unweighted(&self) -> Self {
        KeywordGraph {
            weights: vec![1; self.weights.len()],
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("t{i}")).collect()
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = KeywordGraph::from_edges(labels(4), [(2, 0, 1), (0, 1, 5), (3, 0, 2)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbor_weights(0), &[5, 1, 2]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.weight(1, 0), Some(5));
        assert_eq!(g.strength(0), 8);
        assert_eq!(g.edge_count(), 3);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1, 5), (0, 2, 1), (0, 3, 2)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            KeywordGraph::from_edges(labels(2), [(0, 0, 1)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            KeywordGraph::from_edges(labels(2), [(0, 1, 1), (1, 0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            KeywordGraph::from_edges(labels(2), [(0, 2, 1)]),
            Err(GraphError::NodeOutOfRange(0, 2, 2))
        );
        assert_eq!(
            KeywordGraph::from_edges(labels(2), [(0, 1, 0)]),
            Err(GraphError::ZeroWeight(0, 1))
        );
    }

    #[test]
    fn isolated_nodes_kept() {
        let g = KeywordGraph::from_edges(labels(3), [(0, 1, 1)]).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.degree(2), 0);
        assert!(g.neighbors(2).is_empty());
    }
}
