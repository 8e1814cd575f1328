//! Fusion of adjacent k-shells into named layers.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::KeywordGraph;
use crate::kcore::CoreDecomposition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayerError {
    #[error("no layer covers core number {0}")]
    SpecGapError(usize),
    #[error("core number {0} is covered by more than one layer")]
    SpecOverlapError(usize),
    #[error("layer {name:?} has k_min {k_min} > k_max {k_max}")]
    InvalidRange {
        name: String,
        k_min: usize,
        k_max: usize,
    },
    #[error("layers must be ordered by descending k_max")]
    Unordered,
    #[error("layer names must be nonempty and unique")]
    BadName,
    #[error("graph has {graph} nodes but decomposition has {decomposition}")]
    NodeCountMismatch { graph: usize, decomposition: usize },
    #[error("cannot parse layer spec {0:?}: expected name:kmin-kmax[,name:kmin-kmax...]")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub name: String,
    pub k_min: usize,
    pub k_max: usize,
}

impl Layer {
    pub fn new(name: impl Into<String>, k_min: usize, k_max: usize) -> Self {
        Layer {
            name: name.into(),
            k_min,
            k_max,
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        (self.k_min..=self.k_max).contains(&k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LayerSpec {
    pub layers: Vec<Layer>,
}

impl LayerSpec {
    /// Sorts `layers` by descending `k_max` and validates the result.
    pub fn new(mut layers: Vec<Layer>) -> Result<Self, LayerError> {
        layers.sort_by_key(|l| std::cmp::Reverse(l.k_max));
        let spec = LayerSpec { layers };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks range sanity, naming, ordering and pairwise disjointness.
    pub fn validate(&self) -> Result<(), LayerError> {
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.k_min > layer.k_max {
                return Err(LayerError::InvalidRange {
                    name: layer.name.clone(),
                    k_min: layer.k_min,
                    k_max: layer.k_max,
                });
            }
            if layer.name.trim().is_empty()
                || self.layers[..i].iter().any(|l| l.name == layer.name)
            {
                return Err(LayerError::BadName);
            }
        }
        for (i, a) in self.layers.iter().enumerate() {
            for b in &self.layers[i + 1..] {
                let lo = a.k_min.max(b.k_min);
                if lo <= a.k_max.min(b.k_max) {
                    return Err(LayerError::SpecOverlapError(lo));
                }
            }
        }
        if self.layers.windows(2).any(|w| w[0].k_max < w[1].k_max) {
            return Err(LayerError::Unordered);
        }
        Ok(())
    }

    /// Requires every `k` in `0..=max_core` to be covered.
    pub fn validate_covers(&self, max_core: usize) -> Result<(), LayerError> {
        self.validate()?;
        match (0..=max_core).find(|&k| self.layer_index(k).is_none()) {
            Some(k) => Err(LayerError::SpecGapError(k)),
            None => Ok(()),
        }
    }

    /// Position of the layer containing `k`.
    pub fn layer_index(&self, k: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(k))
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

impl FromStr for LayerSpec {
    type Err = LayerError;

    /// Parses `central:12-13,intermedia:9-11`; a bare `name:k` is a
    /// single-value range.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || LayerError::Syntax(s.to_owned());
        let mut layers = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, range) = part.rsplit_once(':').ok_or_else(syntax)?;
            let (lo, hi) = range.split_once('-').unwrap_or((range, range));
            let lo = lo.trim().parse().map_err(|_| syntax())?;
            let hi = hi.trim().parse().map_err(|_| syntax())?;
            layers.push(Layer::new(name.trim(), lo, hi));
        }
        if layers.is_empty() {
            return Err(syntax());
        }
        LayerSpec::new(layers)
    }
}

impl fmt::Display for LayerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.layers.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}-{}", l.name, l.k_min, l.k_max)?;
        }
        Ok(())
    }
}

pub const CENTRAL: &str = "central";
pub const INTERMEDIATE: &str = "intermedia";
pub const LATERAL: &str = "lateral";
pub const BORDER: &str = "borde";

/// Four-layer grouping of `0..=max_core`.
///
/// `k = 0` always belongs to the border layer. Core numbers from `max_core`
/// downward go two to central, three to intermediate and three to lateral;
/// whatever remains joins the border. Layers that receive no values are
/// omitted.
pub fn default_layer_spec(max_core: usize) -> LayerSpec {
    let mut layers = Vec::new();
    let mut top = max_core;
    for (name, width) in [(CENTRAL, 2), (INTERMEDIATE, 3), (LATERAL, 3)] {
        if top == 0 {
            break;
        }
        let bottom = top.saturating_sub(width - 1).max(1);
        layers.push(Layer::new(name, bottom, top));
        top = bottom - 1;
    }
    layers.push(Layer::new(BORDER, 0, top));
    LayerSpec { layers }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub id: usize,
    pub term: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellRow {
    pub k: usize,
    pub layer: String,
    /// Sorted by descending degree, then term.
    pub members: Vec<Member>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerReport {
    /// One row per nonempty shell, by descending `k`.
    pub rows: Vec<ShellRow>,
    /// Member count per layer in spec order, including empty layers.
    pub layer_totals: IndexMap<String, usize>,
    pub max_core: usize,
    pub spec: LayerSpec,
    /// Index into `spec.layers` for every node.
    pub node_layer: Vec<usize>,
}

impl LayerReport {
    pub fn layer_name(&self, v: usize) -> &str {
        &self.spec.layers[self.node_layer[v]].name
    }

    /// 1-based position of the node's layer in the spec (central is 1 by default).
    pub fn cluster(&self, v: usize) -> usize {
        self.node_layer[v] + 1
    }

    /// `shell,layer,term,degree,core_number`, one line per node.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["shell", "layer", "term", "degree", "core_number"])?;
        for row in &self.rows {
            for m in &row.members {
                let k = row.k.to_string();
                w.write_record([
                    k.as_str(),
                    row.layer.as_str(),
                    m.term.as_str(),
                    m.degree.to_string().as_str(),
                    k.as_str(),
                ])?;
            }
        }
        w.flush()
    }

    /// Aligned text table, one line per shell: `k=13  central  a; b; c`.
    pub fn write_table<W: Write>(&self, mut out: W) -> io::Result<()> {
        let core_w = self
            .rows
            .iter()
            .map(|r| format!("k={}", r.k).len())
            .chain(["Core".len()])
            .max()
            .unwrap_or(4);
        let layer_w = self
            .rows
            .iter()
            .map(|r| r.layer.len())
            .chain(["Layer".len()])
            .max()
            .unwrap_or(5);
        writeln!(out, "{:<core_w$}  {:<layer_w$}  Keywords", "Core", "Layer")?;
        for row in &self.rows {
            let terms: Vec<&str> = row.members.iter().map(|m| m.term.as_str()).collect();
            let core = format!("k={}", row.k);
            writeln!(
                out,
                "{core:<core_w$}  {:<layer_w$}  {}",
                row.layer,
                terms.join("; ")
            )?;
        }
        writeln!(out)?;
        for (name, total) in &self.layer_totals {
            writeln!(out, "{name}: {total}")?;
        }
        Ok(())
    }
}

/// Places every node in the layer whose range holds its core number.
///
/// Only core numbers that actually occur need to be covered.
pub fn assign_layers(
    graph: &KeywordGraph,
    decomp: &CoreDecomposition,
    spec: &LayerSpec,
) -> Result<LayerReport, LayerError> {
    if graph.node_count() != decomp.node_count() {
        return Err(LayerError::NodeCountMismatch {
            graph: graph.node_count(),
            decomposition: decomp.node_count(),
        });
    }
    spec.validate()?;

    let mut shell_layer = std::collections::BTreeMap::new();
    for &k in decomp.shells.keys() {
        let idx = spec.layer_index(k).ok_or(LayerError::SpecGapError(k))?;
        shell_layer.insert(k, idx);
    }

    let node_layer: Vec<usize> = decomp.core_number.iter().map(|k| shell_layer[k]).collect();
    let mut layer_totals: IndexMap<String, usize> =
        spec.layers.iter().map(|l| (l.name.clone(), 0)).collect();
    for &idx in &node_layer {
        layer_totals[idx] += 1;
    }

    let rows = decomp
        .shells
        .iter()
        .rev()
        .map(|(&k, nodes)| {
            let mut members: Vec<Member> = nodes
                .iter()
                .map(|&id| Member {
                    id,
                    term: graph.label(id).to_owned(),
                    degree: graph.degree(id),
                })
                .collect();
            members.sort_by(|a, b| b.degree.cmp(&a.degree).then_with(|| a.term.cmp(&b.term)));
            ShellRow {
                k,
                layer: spec.layers[shell_layer[&k]].name.clone(),
                members,
            }
        })
        .collect();

    Ok(LayerReport {
        rows,
        layer_totals,
        max_core: decomp.max_core,
        spec: spec.clone(),
        node_layer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kcore::decompose;

    fn ranges(spec: &LayerSpec) -> Vec<(&str, usize, usize)> {
        spec.layers
            .iter()
            .map(|l| (l.name.as_str(), l.k_min, l.k_max))
            .collect()
    }

    #[test]
    fn default_spec_thirteen() {
        assert_eq!(
            ranges(&default_layer_spec(13)),
            vec![
                (CENTRAL, 12, 13),
                (INTERMEDIATE, 9, 11),
                (LATERAL, 6, 8),
                (BORDER, 0, 5)
            ]
        );
    }

    #[test]
    fn default_spec_small() {
        assert_eq!(
            ranges(&default_layer_spec(2)),
            vec![(CENTRAL, 1, 2), (BORDER, 0, 0)]
        );
        assert_eq!(ranges(&default_layer_spec(0)), vec![(BORDER, 0, 0)]);
        assert_eq!(
            ranges(&default_layer_spec(1)),
            vec![(CENTRAL, 1, 1), (BORDER, 0, 0)]
        );
        assert_eq!(
            ranges(&default_layer_spec(8)),
            vec![
                (CENTRAL, 7, 8),
                (INTERMEDIATE, 4, 6),
                (LATERAL, 1, 3),
                (BORDER, 0, 0)
            ]
        );
        assert_eq!(
            ranges(&default_layer_spec(4)),
            vec![(CENTRAL, 3, 4), (INTERMEDIATE, 1, 2), (BORDER, 0, 0)]
        );
    }

    #[test]
    fn default_spec_always_covers() {
        for max_core in 0..40 {
            default_layer_spec(max_core).validate_covers(max_core).unwrap();
        }
    }

    #[test]
    fn single_layer_triangle() {
        let g = KeywordGraph::from_unlabeled_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = decompose(&g);
        let spec = LayerSpec::new(vec![Layer::new("core", 0, 2)]).unwrap();
        let report = assign_layers(&g, &d, &spec).unwrap();
        assert_eq!(report.layer_totals["core"], 3);
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.rows[0].k, 2);
        assert_eq!(report.cluster(0), 1);
    }

    #[test]
    fn gap_on_isolate() {
        let g = KeywordGraph::from_unlabeled_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = decompose(&g);
        let spec = LayerSpec::new(vec![Layer::new("top", 1, 2)]).unwrap();
        assert_eq!(
            assign_layers(&g, &d, &spec).unwrap_err(),
            LayerError::SpecGapError(0)
        );
    }

    #[test]
    fn overlap_detected() {
        let spec = LayerSpec {
            layers: vec![Layer::new("a", 3, 6), Layer::new("b", 0, 4)],
        };
        assert_eq!(spec.validate(), Err(LayerError::SpecOverlapError(3)));
        let g = KeywordGraph::from_unlabeled_edges(1, []).unwrap();
        assert_eq!(
            assign_layers(&g, &decompose(&g), &spec).unwrap_err(),
            LayerError::SpecOverlapError(3)
        );
    }

    #[test]
    fn members_sorted_by_degree_then_term() {
        let labels = ["d", "c", "b", "a"].map(String::from).to_vec();
        // a 4-cycle plus chord 0-2: degrees 3,2,3,2, all core 2
        let g = KeywordGraph::from_edges(
            labels,
            [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)],
        )
        .unwrap();
        let d = decompose(&g);
        let report = assign_layers(&g, &d, &default_layer_spec(d.max_core)).unwrap();
        let terms: Vec<_> = report.rows[0].members.iter().map(|m| m.term.as_str()).collect();
        assert_eq!(terms, vec!["b", "d", "a", "c"]);
    }

    #[test]
    fn parse_spec_string() {
        let spec: LayerSpec = "borde:0-5, central:12-13,lateral:6-8,intermedia:9-11"
            .parse()
            .unwrap();
        assert_eq!(ranges(&spec), ranges(&default_layer_spec(13)));
        assert_eq!(spec.to_string().parse::<LayerSpec>().unwrap(), spec);
        assert!("central".parse::<LayerSpec>().is_err());
        assert!("a:5-3".parse::<LayerSpec>().is_err());
        assert_eq!("solo:4".parse::<LayerSpec>().unwrap().layers[0], Layer::new("solo", 4, 4));
    }

    #[test]
    fn csv_and_table() {
        let g = KeywordGraph::from_edges(
            ["x", "y", "z"].map(String::from).to_vec(),
            [(0, 1, 1)],
        )
        .unwrap();
        let d = decompose(&g);
        let report = assign_layers(&g, &d, &default_layer_spec(d.max_core)).unwrap();
        let mut csv = Vec::new();
        report.write_csv(&mut csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "shell,layer,term,degree,core_number\n1,central,x,1,1\n1,central,y,1,1\n0,borde,z,0,0\n"
        );
        let mut table = Vec::new();
        report.write_table(&mut table).unwrap();
        assert_eq!(
            String::from_utf8(table).unwrap(),
            "Core  Layer    Keywords\nk=1   central  x; y\nk=0   borde    z\n\ncentral: 2\nborde: 1\n"
        );
    }
}
