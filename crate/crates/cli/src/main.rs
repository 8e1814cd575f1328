use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use coword_core::export::{export_pajek_partition, read_edge_list, read_pajek};
use coword_core::kcore::{brute_force_core_numbers, decompose};
use coword_core::pipeline::{run_pipeline, Format, PipelineConfig};
use coword_core::record::{corpus_summary, parse_export};
use coword_core::{KeywordField, KeywordGraph, LayerSpec, MatrixMode};

/// Keyword co-occurrence networks and k-core layers from Web of Science exports.
#[derive(Parser)]
#[command(name = "coword-kcore", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, build the keyword network, decompose it and write every export.
    Run(RunArgs),
    /// Core numbers of a graph file (Pajek .net or `u v [w]` edge list).
    Decompose {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = DecomposeOutput::Csv)]
        format: DecomposeOutput,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Descriptive statistics of an export file.
    Summary { input: PathBuf },
    /// Brute-force core numbers for graphs of at most 14 nodes.
    Oracle { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeOutput {
    /// `id,label,core_number` rows.
    Csv,
    /// Pajek partition.
    Clu,
}

#[derive(clap::Args)]
struct RunArgs {
    /// TOML config; flags below override it.
    #[arg(short, long)]
    config: Option<PathBuf>,
    #[arg(short, long)]
    input: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Minimum number of records a keyword must appear in.
    #[arg(short, long)]
    threshold: Option<usize>,
    /// `author` (DE) or `keywords_plus` (ID).
    #[arg(long)]
    field: Option<KeywordField>,
    /// `binary` or `count`.
    #[arg(long)]
    mode: Option<MatrixMode>,
    /// Exact terms to drop; replaces the configured list.
    #[arg(long = "exclude", value_name = "TERM")]
    exclusions: Vec<String>,
    /// Drop no terms at all.
    #[arg(long, conflicts_with = "exclusions")]
    no_exclusions: bool,
    /// Layer ranges, e.g. `central:12-13,intermedia:9-11,lateral:6-8,borde:0-5`.
    #[arg(long)]
    layers: Option<LayerSpec>,
    /// Output formats (pajek, graphml, vosviewer, dot, csv).
    #[arg(long = "format", value_delimiter = ',')]
    formats: Vec<Format>,
}

impl RunArgs {
    fn into_config(self) -> Result<PipelineConfig> {
        let mut config = match &self.config {
            Some(path) => PipelineConfig::from_file(path)?,
            None => PipelineConfig::default(),
        };
        if let Some(input) = self.input {
            config.input_path = input;
        }
        if let Some(output) = self.output {
            config.output_dir = output;
        }
        if let Some(t) = self.threshold {
            config.threshold = t;
        }
        if let Some(field) = self.field {
            config.keyword_field = field;
        }
        if let Some(mode) = self.mode {
            config.matrix_mode = mode;
        }
        if self.no_exclusions {
            config.exclusions.clear();
        } else if !self.exclusions.is_empty() {
            config.exclusions = self.exclusions;
        }
        if self.layers.is_some() {
            config.layer_spec = self.layers;
        }
        if !self.formats.is_empty() {
            config.formats = self.formats;
        }
        Ok(config)
    }
}

fn read_graph(path: &Path) -> Result<KeywordGraph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let reader = BufReader::new(file);
    let is_pajek = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("net"));
    let graph = if is_pajek {
        read_pajek(reader)
    } else {
        read_edge_list(reader)
    };
    graph.with_context(|| format!("cannot read graph {}", path.display()))
}

fn write_cores(out: &mut dyn Write, graph: &KeywordGraph, cores: &[usize]) -> io::Result<()> {
    writeln!(out, "id,label,core_number")?;
    for (v, k) in cores.iter().enumerate() {
        let label = graph.label(v);
        if label.contains([',', '"', '\n']) {
            writeln!(out, "{v},\"{}\",{k}", label.replace('"', "\"\""))?;
        } else {
            writeln!(out, "{v},{label},{k}")?;
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(args) => {
            let config = args.into_config()?;
            if config.input_path.as_os_str().is_empty() {
                bail!("no input file: pass --input or set `input` in the config");
            }
            let result = run_pipeline(&config)?;
            print!("{result}");
        }
        Command::Decompose {
            graph,
            format,
            output,
        } => {
            let graph = read_graph(&graph)?;
            let decomp = decompose(&graph);
            let mut out: Box<dyn Write> = match &output {
                Some(path) => Box::new(BufWriter::new(
                    File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
                )),
                None => Box::new(io::stdout().lock()),
            };
            match format {
                DecomposeOutput::Csv => write_cores(&mut out, &graph, &decomp.core_number)?,
                DecomposeOutput::Clu => export_pajek_partition(&graph, &decomp, &mut out)?,
            }
            out.flush()?;
            log::info!("max core {}", decomp.max_core);
        }
        Command::Summary { input } => {
            let file =
                File::open(&input).with_context(|| format!("cannot open {}", input.display()))?;
            let corpus = parse_export(BufReader::new(file), input.display().to_string())
                .with_context(|| format!("cannot parse {}", input.display()))?;
            print!("{}", corpus_summary(&corpus));
        }
        Command::Oracle { graph } => {
            let graph = read_graph(&graph)?;
            let cores = brute_force_core_numbers(&graph)?;
            write_cores(&mut io::stdout().lock(), &graph, &cores)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("COWORD_LOG", "warn")).init();
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
