mod common;

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};

use common::FIXTURE_30;
use coword_core::pipeline::{run_pipeline, Format, PipelineConfig, PipelineError};
use coword_core::vocab::KeywordField;
use coword_core::MatrixMode;

fn fixture_config(dir: &Path, threshold: usize) -> PipelineConfig {
    let input = dir.join("export.txt");
    fs::write(&input, FIXTURE_30).unwrap();
    PipelineConfig {
        input_path: input,
        threshold,
        output_dir: dir.join("out"),
        ..Default::default()
    }
}

fn chain(err: &dyn Error) -> String {
    let mut msg = err.to_string();
    let mut cause = err.source();
    while let Some(c) = cause {
        msg.push_str(": ");
        msg.push_str(&c.to_string());
        cause = c.source();
    }
    msg
}

fn names(files: &[PathBuf]) -> Vec<String> {
    files
        .iter()
        .map(|f| f.file_name().unwrap().to_string_lossy().into_owned())
        .collect()
}

#[test]
fn fixture_threshold_two() {
    let dir = tempfile::tempdir().unwrap();
    let result = run_pipeline(&fixture_config(dir.path(), 2)).unwrap();
    assert_eq!(result.corpus.articles, 30);
    assert_eq!(result.corpus.distinct_author_keywords, 28);
    assert_eq!(result.vocabulary_size, 20);
    assert_eq!(result.edge_count, 132);
    assert_eq!(result.max_core, 10);
    assert_eq!(
        result.shell_sizes.into_iter().collect::<Vec<_>>(),
        vec![(7, 1), (8, 1), (9, 7), (10, 11)]
    );
    assert_eq!(
        result.layer_totals.into_iter().collect::<Vec<_>>(),
        vec![
            ("central".to_owned(), 18),
            ("intermedia".to_owned(), 2),
            ("lateral".to_owned(), 0),
            ("borde".to_owned(), 0)
        ]
    );
    assert!(result.warnings.is_empty());
    assert_eq!(
        names(&result.files),
        [
            "keywords.net",
            "keywords.clu",
            "keywords.graphml",
            "vosviewer_map.txt",
            "vosviewer_network.txt",
            "keywords.dot",
            "layers.csv",
            "matrix.csv",
            "layers.txt"
        ]
    );

    let out = dir.path().join("out");
    let net = fs::read_to_string(out.join("keywords.net")).unwrap();
    assert!(net.starts_with("*Vertices 20\n1 \"open access\"\n"));
    let map = fs::read_to_string(out.join("vosviewer_map.txt")).unwrap();
    assert_eq!(map.lines().count(), 21);
    let csv = fs::read_to_string(out.join("layers.csv")).unwrap();
    assert_eq!(csv.lines().count(), 21);
    let aas = csv
        .lines()
        .find(|l| l.contains(",altmetric attention score,"))
        .unwrap();
    assert!(aas.starts_with("8,intermedia,"), "{aas}");
}

#[test]
fn default_threshold_and_count_mode() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = fixture_config(dir.path(), 4);
    config.matrix_mode = MatrixMode::Count;
    config.formats = vec![Format::Pajek];
    let result = run_pipeline(&config).unwrap();
    assert_eq!(result.vocabulary_size, 13);
    assert_eq!(result.edge_count, 69);
    assert_eq!(result.max_core, 9);
    let net = fs::read_to_string(dir.path().join("out/keywords.net")).unwrap();
    let weight_sum: u64 = net
        .lines()
        .skip_while(|l| *l != "*Edges")
        .skip(1)
        .map(|l| l.rsplit(' ').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(weight_sum, 233);
}

#[test]
fn keywords_plus_field() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = fixture_config(dir.path(), 1);
    config.keyword_field = KeywordField::KeywordsPlus;
    let result = run_pipeline(&config).unwrap();
    assert_eq!(result.vocabulary_size, 11);
}

#[test]
fn threshold_above_every_frequency_gives_empty_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let result = run_pipeline(&fixture_config(dir.path(), 1000)).unwrap();
    assert_eq!(result.vocabulary_size, 0);
    assert_eq!(result.max_core, 0);
    assert_eq!(result.warnings.len(), 1);
    let out = dir.path().join("out");
    assert_eq!(fs::read_to_string(out.join("keywords.net")).unwrap(), "*Vertices 0\n*Edges\n");
    assert_eq!(fs::read_to_string(out.join("keywords.clu")).unwrap(), "*Vertices 0\n");
    assert!(result.to_string().contains("warning:"));
}

#[test]
fn explicit_layer_spec_with_gap_fails_in_layer_stage() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = fixture_config(dir.path(), 2);
    config.layer_spec = Some("top:10-10,low:0-8".parse().unwrap());
    let err = run_pipeline(&config).unwrap_err();
    assert!(matches!(err, PipelineError::Layers(_)));
    let msg = chain(&err);
    assert_eq!(msg, "layer stage failed: no layer covers core number 9");
}

#[test]
fn malformed_input_reports_stage_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "FN x\nPT J\nDE a\nEF\n").unwrap();
    let config = PipelineConfig {
        input_path: input,
        output_dir: dir.path().join("out"),
        ..Default::default()
    };
    let err = run_pipeline(&config).unwrap_err();
    let msg = chain(&err);
    assert!(msg.starts_with("parse stage failed for "), "{msg}");
    assert!(msg.ends_with("line 4: malformed record: record opened at line 2 has no ER"), "{msg}");
}
