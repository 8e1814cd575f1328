//! Keyword co-occurrence networks from Web of Science exports, decomposed
//! into k-cores and fused into hierarchical layers.
//!
//! The stages run in order:
//!
//! 1. [`record::parse_export`] reads field-tagged records.
//! 2. [`vocab::build_vocabulary`] normalizes keywords and keeps the frequent ones.
//! 3. [`cooccur::build_matrix`] and [`cooccur::build_graph`] build the network.
//! 4. [`kcore::decompose`] computes core numbers.
//! 5. [`layer::assign_layers`] groups shells into named layers.
//! 6. [`export`] writes Pajek, GraphML, VOSviewer, DOT and CSV files.
//!
//! [`pipeline::run_pipeline`] strings all of them together.

pub mod cooccur;
pub mod export;
pub mod graph;
pub mod kcore;
pub mod layer;
pub mod pipeline;
pub mod record;
pub mod vocab;

pub use cooccur::{build_graph, build_matrix, CoOccurrenceMatrix, MatrixMode};
pub use graph::{GraphError, KeywordGraph};
pub use kcore::{brute_force_core_numbers, decompose, CoreDecomposition, OracleError};
pub use layer::{assign_layers, default_layer_spec, Layer, LayerError, LayerReport, LayerSpec};
pub use pipeline::{run_pipeline, Format, PipelineConfig, PipelineError, PipelineResult};
pub use record::{corpus_summary, parse_export, BibRecord, Corpus, ParseError, SummaryTable};
pub use vocab::{build_vocabulary, normalize_term, KeywordField, Vocabulary};
