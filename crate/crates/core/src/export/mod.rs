//! Network file writers, plus readers for the formats the CLI accepts.

pub mod dot;
pub mod edgelist;
pub mod graphml;
pub mod pajek;
pub mod vosviewer;

use std::io;

use thiserror::Error;

use crate::graph::{GraphError, KeywordGraph};
use crate::kcore::CoreDecomposition;

pub use dot::export_dot;
pub use edgelist::read_edge_list;
pub use graphml::export_graphml;
pub use pajek::{export_pajek, export_pajek_partition, read_pajek};
pub use vosviewer::export_vosviewer;

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl ReadError {
    pub(crate) fn syntax(line: usize, reason: impl Into<String>) -> Self {
        ReadError::Syntax {
            line,
            reason: reason.into(),
        }
    }
}

fn check_same_nodes(graph: &KeywordGraph, decomp: &CoreDecomposition) -> io::Result<()> {
    if graph.node_count() == decomp.node_count() {
        Ok(())
    } else {
        Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            format!(
                "graph has {} nodes but decomposition has {}",
                graph.node_count(),
                decomp.node_count()
            ),
        ))
    }
}
