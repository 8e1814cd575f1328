//! VOSviewer map and network files (tab separated).

use std::io::{self, Write};

use super::check_same_nodes;
use crate::graph::KeywordGraph;
use crate::kcore::CoreDecomposition;
use crate::layer::LayerReport;

pub const MAP_HEADER: &str =
    "id\tlabel\tcluster\tweight<Links>\tweight<Total link strength>\tscore<Core>";

/// Writes the map file (one row per node, cluster = 1-based layer) and the
/// network file (`id<TAB>id<TAB>weight` per edge). Ids are 1-based.
pub fn export_vosviewer<M: Write, N: Write>(
    graph: &KeywordGraph,
    decomp: &CoreDecomposition,
    layers: &LayerReport,
    mut map: M,
    mut network: N,
) -> io::Result<()> {
    check_same_nodes(graph, decomp)?;
    writeln!(map, "{MAP_HEADER}")?;
    for v in 0..graph.node_count() {
        // Tabs and newlines would break the row.
        let label: String = graph
            .label(v)
            .chars()
            .map(|c| if c.is_control() { ' ' } else { c })
            .collect();
        writeln!(
            map,
            "{}\t{}\t{}\t{}\t{}\t{}",
            v + 1,
            label,
            layers.cluster(v),
            graph.degree(v),
            graph.strength(v),
            decomp.core_number[v]
        )?;
    }
    for (i, j, w) in graph.edges() {
        writeln!(network, "{}\t{}\t{}", i + 1, j + 1, w)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kcore::decompose;
    use crate::layer::{assign_layers, default_layer_spec};

    fn render(graph: &KeywordGraph) -> (String, String) {
        let d = decompose(graph);
        let layers = assign_layers(graph, &d, &default_layer_spec(d.max_core)).unwrap();
        let (mut map, mut net) = (Vec::new(), Vec::new());
        export_vosviewer(graph, &d, &layers, &mut map, &mut net).unwrap();
        (String::from_utf8(map).unwrap(), String::from_utf8(net).unwrap())
    }

    #[test]
    fn triangle() {
        let g = KeywordGraph::from_edges(
            vec!["a".into(), "b".into(), "c".into()],
            [(0, 1, 2), (1, 2, 1), (0, 2, 1)],
        )
        .unwrap();
        let (map, net) = render(&g);
        assert_eq!(
            map,
            format!("{MAP_HEADER}\n1\ta\t1\t2\t3\t2\n2\tb\t1\t2\t3\t2\n3\tc\t1\t2\t2\t2\n")
        );
        assert_eq!(net, "1\t2\t2\n1\t3\t1\n2\t3\t1\n");
    }

    #[test]
    fn isolated_node() {
        let g = KeywordGraph::with_labels(vec!["lonely".into()]);
        let (map, net) = render(&g);
        assert_eq!(map, format!("{MAP_HEADER}\n1\tlonely\t1\t0\t0\t0\n"));
        assert!(net.is_empty());
    }
}
