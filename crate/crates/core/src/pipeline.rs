//! End-to-end run: parse, vocabulary, matrix, graph, decomposition, layers,
//! exports.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use indexmap::IndexMap;
use log::{info, warn};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cooccur::{build_graph, build_matrix, MatrixMode};
use crate::export;
use crate::graph::GraphError;
use crate::kcore::decompose;
use crate::layer::{assign_layers, default_layer_spec, LayerError, LayerSpec};
use crate::record::{corpus_summary, parse_export, ParseError, SummaryTable};
use crate::vocab::{build_vocabulary, KeywordField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Pajek,
    Graphml,
    Vosviewer,
    Dot,
    Csv,
}

impl Format {
    pub const ALL: [Format; 5] = [
        Format::Pajek,
        Format::Graphml,
        Format::Vosviewer,
        Format::Dot,
        Format::Csv,
    ];
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pajek" | "net" => Ok(Format::Pajek),
            "graphml" => Ok(Format::Graphml),
            "vosviewer" | "vos" => Ok(Format::Vosviewer),
            "dot" => Ok(Format::Dot),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub const DEFAULT_THRESHOLD: usize = 4;
pub const DEFAULT_EXCLUSIONS: [&str; 2] = ["altmetric", "altmetrics"];

fn default_threshold() -> usize {
    DEFAULT_THRESHOLD
}

fn default_exclusions() -> Vec<String> {
    DEFAULT_EXCLUSIONS.iter().map(|s| s.to_string()).collect()
}

fn default_formats() -> Vec<Format> {
    Format::ALL.to_vec()
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("coword-out")
}

/// Run parameters. Defaults: author keywords, threshold 4, exclusions
/// `altmetric`/`altmetrics`, binary matrix, generated layer ranges, every
/// output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    #[serde(default, alias = "input")]
    pub input_path: PathBuf,
    #[serde(default)]
    pub keyword_field: KeywordField,
    #[serde(default = "default_threshold")]
    pub threshold: usize,
    #[serde(default = "default_exclusions")]
    pub exclusions: Vec<String>,
    #[serde(default)]
    pub matrix_mode: MatrixMode,
    #[serde(default, alias = "layers")]
    pub layer_spec: Option<LayerSpec>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<Format>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            input_path: PathBuf::new(),
            keyword_field: KeywordField::default(),
            threshold: DEFAULT_THRESHOLD,
            exclusions: default_exclusions(),
            matrix_mode: MatrixMode::default(),
            layer_spec: None,
            output_dir: default_output_dir(),
            formats: default_formats(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("threshold must be at least 1")]
    ZeroThreshold,
    #[error("at least one output format is required")]
    NoFormats,
    #[error("invalid layer spec")]
    Layers(#[from] LayerError),
    #[error("cannot read config {path}")]
    Read { path: PathBuf, source: io::Error },
    #[error("invalid config {path}")]
    Toml {
        path: PathBuf,
        source: toml::de::Error,
    },
}

impl PipelineConfig {
    pub fn from_toml_str(text: &str, origin: &Path) -> Result<Self, ConfigError> {
        let config: PipelineConfig = toml::from_str(text).map_err(|source| ConfigError::Toml {
            path: origin.to_owned(),
            source,
        })?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_owned(),
            source,
        })?;
        Self::from_toml_str(&text, path)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.threshold < 1 {
            return Err(ConfigError::ZeroThreshold);
        }
        if self.formats.is_empty() {
            return Err(ConfigError::NoFormats);
        }
        if let Some(spec) = &self.layer_spec {
            spec.validate()?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration")]
    Config(#[from] ConfigError),
    #[error("no input file given")]
    MissingInput,
    #[error("cannot open input {path}")]
    Input { path: PathBuf, source: io::Error },
    #[error("parse stage failed for {path}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("graph stage failed")]
    Graph(#[from] GraphError),
    #[error("layer stage failed")]
    Layers(#[from] LayerError),
    #[error("export stage failed writing {path}")]
    Export { path: PathBuf, source: io::Error },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineResult {
    pub corpus: SummaryTable,
    pub vocabulary_size: usize,
    pub edge_count: usize,
    pub max_core: usize,
    pub shell_sizes: BTreeMap<usize, usize>,
    pub layer_totals: IndexMap<String, usize>,
    pub files: Vec<PathBuf>,
    pub warnings: Vec<String>,
}

impl fmt::Display for PipelineResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.corpus)?;
        writeln!(f, "Selected keywords (P)  {}", self.vocabulary_size)?;
        writeln!(f, "Edges                 {}", self.edge_count)?;
        writeln!(f, "Max core              {}", self.max_core)?;
        for (name, total) in &self.layer_totals {
            writeln!(f, "  {name}: {total}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        for file in &self.files {
            writeln!(f, "wrote {}", file.display())?;
        }
        Ok(())
    }
}

pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineResult, PipelineError> {
    config.validate()?;
    if config.input_path.as_os_str().is_empty() {
        return Err(PipelineError::MissingInput);
    }
    let path = &config.input_path;
    let file = File::open(path).map_err(|source| PipelineError::Input {
        path: path.clone(),
        source,
    })?;
    let corpus = parse_export(BufReader::new(file), path.display().to_string()).map_err(
        |source| PipelineError::Parse {
            path: path.clone(),
            source,
        },
    )?;
    info!("parsed {} records from {}", corpus.record_count(), path.display());

    let summary = corpus_summary(&corpus);
    let vocab = build_vocabulary(
        &corpus,
        config.keyword_field,
        config.threshold,
        &config.exclusions,
    );
    let matrix = build_matrix(&corpus, &vocab, config.matrix_mode);
    let graph = build_graph(&matrix, &vocab)?;
    let decomp = decompose(&graph);
    let spec = match &config.layer_spec {
        Some(spec) => spec.clone(),
        None => default_layer_spec(decomp.max_core),
    };
    let layers = assign_layers(&graph, &decomp, &spec)?;
    info!(
        "P = {}, {} edges, max core {}",
        vocab.len(),
        graph.edge_count(),
        decomp.max_core
    );

    let mut warnings = Vec::new();
    if vocab.is_empty() {
        let msg = format!(
            "no keyword reaches the frequency threshold {}; outputs are empty",
            vocab.threshold
        );
        warn!("{msg}");
        warnings.push(msg);
    }

    let out_dir = &config.output_dir;
    fs::create_dir_all(out_dir).map_err(|source| PipelineError::Export {
        path: out_dir.clone(),
        source,
    })?;
    let mut files = Vec::new();
    let mut write = |name: &str,
                     body: &dyn Fn(&mut dyn Write) -> io::Result<()>|
     -> Result<(), PipelineError> {
        let path = out_dir.join(name);
        let err = |source| PipelineError::Export {
            path: path.clone(),
            source,
        };
        let mut out = BufWriter::new(File::create(&path).map_err(err)?);
        body(&mut out).map_err(err)?;
        out.flush().map_err(err)?;
        files.push(path);
        Ok(())
    };

    let mut formats = config.formats.clone();
    formats.sort();
    formats.dedup();
    for format in formats {
        match format {
            Format::Pajek => {
                write("keywords.net", &|w| export::export_pajek(&graph, w))?;
                write("keywords.clu", &|w| {
                    export::export_pajek_partition(&graph, &decomp, w)
                })?;
            }
            Format::Graphml => write("keywords.graphml", &|w| {
                export::export_graphml(&graph, &decomp, &layers, w)
            })?,
            Format::Vosviewer => {
                let (mut map, mut network) = (Vec::new(), Vec::new());
                export::export_vosviewer(&graph, &decomp, &layers, &mut map, &mut network)
                    .map_err(|source| PipelineError::Export {
                        path: out_dir.join("vosviewer_map.txt"),
                        source,
                    })?;
                write("vosviewer_map.txt", &|w| w.write_all(&map))?;
                write("vosviewer_network.txt", &|w| w.write_all(&network))?;
            }
            Format::Dot => write("keywords.dot", &|w| {
                export::export_dot(&graph, &decomp, &layers, w)
            })?,
            Format::Csv => {
                write("layers.csv", &|w| layers.write_csv(w))?;
                write("matrix.csv", &|w| matrix.write_csv(&vocab, w))?;
            }
        }
    }
    write("layers.txt", &|w| layers.write_table(w))?;

    Ok(PipelineResult {
        corpus: summary,
        vocabulary_size: vocab.len(),
        edge_count: graph.edge_count(),
        max_core: decomp.max_core,
        shell_sizes: decomp.shell_sizes(),
        layer_totals: layers.layer_totals.clone(),
        files,
        warnings,
    })
}
