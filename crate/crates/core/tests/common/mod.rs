#![allow(dead_code)]

use std::collections::HashSet;

use coword_core::KeywordGraph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FIXTURE_30: &str = include_str!("../fixtures/wos_30.txt");

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(n, p).
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> KeywordGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    KeywordGraph::from_unlabeled_edges(n, edges).unwrap()
}

/// `m` distinct uniform edges over `n` nodes.
pub fn gnm(rng: &mut impl Rng, n: usize, m: usize) -> KeywordGraph {
    let mut seen = HashSet::with_capacity(m * 2);
    while seen.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            seen.insert((u.min(v), u.max(v)));
        }
    }
    KeywordGraph::from_unlabeled_edges(n, seen).unwrap()
}

/// Minimum degree of the subgraph induced by `nodes` (`usize::MAX` if empty).
pub fn min_induced_degree(graph: &KeywordGraph, nodes: &[usize]) -> usize {
    let members: HashSet<usize> = nodes.iter().copied().collect();
    nodes
        .iter()
        .map(|&v| {
            graph
                .neighbors(v)
                .iter()
                .filter(|&&u| members.contains(&(u as usize)))
                .count()
        })
        .min()
        .unwrap_or(usize::MAX)
}

/// Core numbers from the definition: a node's core number is the largest
/// minimum degree over all induced subgraphs that contain it. Exponential.
pub fn subset_core_numbers(graph: &KeywordGraph) -> Vec<usize> {
    let n = graph.node_count();
    assert!(n <= 16);
    let adjacency: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let mut core = vec![0usize; n];
    for set in 1u32..(1 << n) {
        let min_deg = (0..n)
            .filter(|v| set & (1 << v) != 0)
            .map(|v| (adjacency[v] & set).count_ones() as usize)
            .min()
            .unwrap();
        for v in (0..n).filter(|v| set & (1 << v) != 0) {
            core[v] = core[v].max(min_deg);
        }
    }
    core
}

/// Graph whose k-shells have exactly the given sizes (k >= 1).
///
/// The top shell is a clique on `top + 1` nodes plus extra nodes wired to
/// `top` clique members; every node of a lower shell k hangs off k clique
/// members and nothing else.
pub fn graph_with_shells(sizes: &[(usize, usize)]) -> KeywordGraph {
    let top = sizes.iter().map(|&(k, _)| k).max().unwrap();
    let top_size = sizes.iter().find(|&&(k, _)| k == top).unwrap().1;
    assert!(top_size > top, "top shell needs at least top + 1 nodes");
    let clique = top + 1;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    let mut next = clique;
    for _ in clique..top_size {
        edges.extend((0..top).map(|c| (c, next)));
        next += 1;
    }
    for &(k, size) in sizes.iter().filter(|&&(k, _)| k != top) {
        assert!(k >= 1 && k < top);
        for _ in 0..size {
            edges.extend((0..k).map(|c| (c, next)));
            next += 1;
        }
    }
    KeywordGraph::from_unlabeled_edges(next, edges).unwrap()
}

/// Field-tagged text for records with the given DE keyword lists.
pub fn export_text(records: &[Vec<String>]) -> String {
    let mut text = String::from("FN Clarivate Analytics Web of Science\nVR 1.0\n");
    for (i, kws) in records.iter().enumerate() {
        text.push_str(&format!("PT J\nTI record {i}\n"));
        if !kws.is_empty() {
            text.push_str(&format!("DE {}\n", kws.join("; ")));
        }
        text.push_str("ER\n\n");
    }
    text.push_str("EF\n");
    text
}

/// Random corpus of up to `max_records` records over a small term pool.
pub fn random_keyword_lists(rng: &mut impl Rng, max_records: usize) -> Vec<Vec<String>> {
    const POOL: [&str; 14] = [
        "twitter",
        "Twitter",
        "social media",
        "mendeley",
        "citation",
        "altmetrics",
        "altmetric attention score",
        "h-index",
        "open access",
        "scopus",
        "blogs",
        "news",
        "peer review",
        "covid-19",
    ];
    let records = rng.gen_range(0..=max_records);
    (0..records)
        .map(|_| {
            let len = rng.gen_range(0..6);
            (0..len)
                .map(|_| POOL[rng.gen_range(0..POOL.len())].to_owned())
                .collect()
        })
        .collect()
}
