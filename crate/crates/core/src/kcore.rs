//! k-core decomposition by minimum-degree peeling.
//!
//! The k-core of a graph is its largest induced subgraph in which every node
//! has at least `k` neighbors. A node's core number is the largest `k` whose
//! k-core contains it; the k-shell is the set of nodes with core number
//! exactly `k`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use thiserror::Error;

use crate::graph::KeywordGraph;

/// Largest graph [`brute_force_core_numbers`] accepts.
pub const ORACLE_MAX_NODES: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force oracle is limited to {ORACLE_MAX_NODES} nodes, graph has {0}")]
    OracleTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_number: Vec<usize>,
    /// Degeneracy of the graph; 0 for an empty graph.
    pub max_core: usize,
    /// Core number to the sorted ids in that shell. Only nonempty shells.
    pub shells: BTreeMap<usize, Vec<usize>>,
    /// Nodes in removal order.
    pub peel_order: Vec<usize>,
}

impl CoreDecomposition {
    /// Assembles a decomposition from known core numbers. `peel_order` is
    /// left empty.
    pub fn from_core_numbers(core_number: Vec<usize>) -> Self {
        let mut shells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &k) in core_number.iter().enumerate() {
            shells.entry(k).or_default().push(v);
        }
        CoreDecomposition {
            max_core: core_number.iter().copied().max().unwrap_or(0),
            core_number,
            shells,
            peel_order: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.core_number.len()
    }

    pub fn shell(&self, k: usize) -> &[usize] {
        self.shells.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn shell_sizes(&self) -> BTreeMap<usize, usize> {
        self.shells.iter().map(|(&k, v)| (k, v.len())).collect()
    }

    /// Sorted ids of the k-core, `{v : core_number(v) >= k}`.
    pub fn kcore_subgraph(&self, k: usize) -> Vec<usize> {
        self.core_number
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= k)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Computes every node's core number.
///
/// Nodes are bucketed by remaining degree. Each step removes the
/// lowest-id node of minimum remaining degree and decrements its
/// neighbors; the core number is the largest minimum degree seen so far.
/// Edge weights are ignored.
pub fn decompose(graph: &KeywordGraph) -> CoreDecomposition {
    let n = graph.node_count();
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // One min-heap per degree. An entry (v in bucket d) is live while v is
    // unpeeled and degree[v] == d; degrees only fall, so there is at most
    // one live entry per node.
    let mut buckets: Vec<Vec<Reverse<u32>>> = vec![Vec::new(); max_degree + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].push(Reverse(v as u32));
    }
    let mut buckets: Vec<BinaryHeap<Reverse<u32>>> =
        buckets.into_iter().map(BinaryHeap::from).collect();

    let mut peeled = vec![false; n];
    let mut core_number = vec![0usize; n];
    let mut peel_order = Vec::with_capacity(n);
    let mut current = 0usize;
    let mut k = 0usize;

    while peel_order.len() < n {
        let v = loop {
            match buckets[current].pop() {
                Some(Reverse(v)) => {
                    let v = v as usize;
                    if !peeled[v] && degree[v] == current {
                        break v;
                    }
                }
                None => current += 1,
            }
        };
        k = k.max(current);
        core_number[v] = k;
        peeled[v] = true;
        peel_order.push(v);
        for &u in graph.neighbors(v) {
            let u = u as usize;
            if peeled[u] {
                continue;
            }
            degree[u] -= 1;
            let d = degree[u];
            buckets[d].push(Reverse(u as u32));
            current = current.min(d);
        }
    }

    let mut decomposition = CoreDecomposition::from_core_numbers(core_number);
    decomposition.peel_order = peel_order;
    decomposition
}

/// Reference core numbers by repeated pruning, for small graphs only.
///
/// For each `k` from 0 upward, nodes with fewer than `k` surviving
/// neighbors are deleted until nothing changes; survivors have core number
/// at least `k`.
pub fn brute_force_core_numbers(graph: &KeywordGraph) -> Result<Vec<usize>, OracleError> {
    let n = graph.node_count();
    if n > ORACLE_MAX_NODES {
        return Err(OracleError::OracleTooLarge(n));
    }
    let mut core = vec![0usize; n];
    for k in 1.. {
        let mut alive = vec![true; n];
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v])
                .filter(|&v| {
                    graph
                        .neighbors(v)
                        .iter()
                        .filter(|&&u| alive[u as usize])
                        .count()
                        < k
                })
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
            }
        }
        if !alive.contains(&true) {
            break;
        }
        for v in (0..n).filter(|&v| alive[v]) {
            core[v] = k;
        }
    }
    Ok(core)
}
