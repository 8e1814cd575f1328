//! Document-level keyword co-occurrence.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, KeywordGraph};
use crate::record::Corpus;
use crate::vocab::Vocabulary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixMode {
    /// 1 wherever a pair co-occurs at least once.
    #[default]
    Binary,
    /// Number of records in which the pair co-occurs.
    Count,
}

impl FromStr for MatrixMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binary" => Ok(MatrixMode::Binary),
            "count" => Ok(MatrixMode::Count),
            other => Err(format!("unknown matrix mode {other:?} (expected binary or count)")),
        }
    }
}

impl fmt::Display for MatrixMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixMode::Binary => "binary",
            MatrixMode::Count => "count",
        })
    }
}

/// Sparse symmetric P×P matrix. Only the strict upper triangle is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoOccurrenceMatrix {
    dimension: usize,
    entries: BTreeMap<(usize, usize), u64>,
    mode: MatrixMode,
}

impl CoOccurrenceMatrix {
    pub fn new(dimension: usize, mode: MatrixMode) -> Self {
        CoOccurrenceMatrix {
            dimension,
            entries: BTreeMap::new(),
            mode,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn mode(&self) -> MatrixMode {
        self.mode
    }

    /// Value at `(i, j)` in either orientation; the diagonal is zero.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return 0;
        }
        let key = (i.min(j), i.max(j));
        self.entries.get(&key).copied().unwrap_or(0)
    }

    /// Nonzero upper-triangle entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// Adds one co-occurrence of the distinct ids `i` and `j`.
    pub fn record_pair(&mut self, i: usize, j: usize) {
        assert!(i != j, "diagonal entries are not stored");
        assert!(i < self.dimension && j < self.dimension, "index out of range");
        let cell = self.entries.entry((i.min(j), i.max(j))).or_insert(0);
        *cell = match self.mode {
            MatrixMode::Binary => 1,
            MatrixMode::Count => *cell + 1,
        };
    }

    /// Dense CSV with the vocabulary terms as header row and column.
    pub fn write_csv<W: Write>(&self, vocab: &Vocabulary, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec![String::new()];
        header.extend(vocab.labels());
        w.write_record(&header)?;
        for i in 0..self.dimension {
            let mut row = Vec::with_capacity(self.dimension + 1);
            row.push(vocab.term(i).to_owned());
            row.extend((0..self.dimension).map(|j| self.get(i, j).to_string()));
            w.write_record(&row)?;
        }
        w.flush()
    }
}

/// Counts every unordered pair of retained keywords once per record.
pub fn build_matrix(corpus: &Corpus, vocab: &Vocabulary, mode: MatrixMode) -> CoOccurrenceMatrix {
    let mut matrix = CoOccurrenceMatrix::new(vocab.len(), mode);
    for record in &corpus.records {
        let ids = vocab.record_ids(record);
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                matrix.record_pair(i, j);
            }
        }
    }
    matrix
}

/// One node per vocabulary term and one edge per nonzero matrix entry.
pub fn build_graph(
    matrix: &CoOccurrenceMatrix,
    vocab: &Vocabulary,
) -> Result<KeywordGraph, GraphError> {
    if matrix.dimension() != vocab.len() {
        return Err(GraphError::DimensionMismatch {
            matrix: matrix.dimension(),
            vocab: vocab.len(),
        });
    }
    KeywordGraph::from_edges(vocab.labels(), matrix.entries())
}
