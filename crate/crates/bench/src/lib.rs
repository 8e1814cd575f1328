//! Synthetic inputs for the benchmarks.

use std::collections::HashSet;

use coword_core::KeywordGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `edges` distinct uniform edges over `nodes` nodes, seeded.
pub fn random_graph(nodes: usize, edges: usize, seed: u64) -> KeywordGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(edges);
    while seen.len() < edges {
        let u = rng.gen_range(0..nodes);
        let v = rng.gen_range(0..nodes);
        if u != v {
            seen.insert((u.min(v), u.max(v)));
        }
    }
    KeywordGraph::from_unlabeled_edges(nodes, seen).expect("distinct edges")
}

/// A field-tagged export with `records` records drawing author keywords
/// from a Zipf-like pool of `pool` terms.
pub fn synthetic_export(records: usize, pool: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::from("FN Clarivate Analytics Web of Science\nVR 1.0\n");
    for i in 0..records {
        let count = rng.gen_range(3..9);
        let terms: Vec<String> = (0..count)
            .map(|_| {
                let rank = (pool as f64).powf(rng.gen::<f64>()) as usize;
                format!("keyword {}", rank.min(pool - 1))
            })
            .collect();
        text.push_str(&format!(
            "PT J\nAU Author {i}\nTI Title {i}\nDE {}\nPY {}\nER\n\n",
            terms.join("; "),
            2012 + i % 13
        ));
    }
    text.push_str("EF\n");
    text
}
