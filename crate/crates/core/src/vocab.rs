//! Keyword normalization, frequency thresholding and term ids.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::record::{BibRecord, Corpus};

/// Which keyword field of a record feeds the vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KeywordField {
    /// Author keywords (`DE`).
    #[default]
    Author,
    /// Indexer-generated Keywords Plus (`ID`).
    KeywordsPlus,
}

impl KeywordField {
    pub fn raw_keywords(self, record: &BibRecord) -> &[String] {
        match self {
            KeywordField::Author => &record.author_keywords,
            KeywordField::KeywordsPlus => &record.keywords_plus,
        }
    }
}

impl FromStr for KeywordField {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "author" | "de" | "DE" => Ok(KeywordField::Author),
            "keywords_plus" | "keywords-plus" | "id" | "ID" => Ok(KeywordField::KeywordsPlus),
            other => Err(format!(
                "unknown keyword field {other:?} (expected author or keywords_plus)"
            )),
        }
    }
}

impl fmt::Display for KeywordField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KeywordField::Author => "author",
            KeywordField::KeywordsPlus => "keywords_plus",
        })
    }
}

/// Lowercases, collapses internal whitespace and strips trailing periods.
///
/// An empty result means the token carries no term.
pub fn normalize_term(raw: &str) -> String {
    let folded = raw.to_lowercase();
    let mut out = folded.split_whitespace().collect::<Vec<_>>().join(" ");
    while out.ends_with('.') {
        out.pop();
        let trimmed = out.trim_end().len();
        out.truncate(trimmed);
    }
    out
}

/// The distinct normalized keywords of one record.
pub fn record_terms(record: &BibRecord, field: KeywordField) -> BTreeSet<String> {
    field
        .raw_keywords(record)
        .iter()
        .map(|k| normalize_term(k))
        .filter(|k| !k.is_empty())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub id: usize,
    pub term: String,
    pub doc_frequency: usize,
}

/// Retained terms with ids `0..P` in descending document frequency,
/// ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<Term>,
    index: HashMap<String, usize>,
    pub threshold: usize,
    pub exclusions: Vec<String>,
    pub field: KeywordField,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn id_of(&self, normalized: &str) -> Option<usize> {
        self.index.get(normalized).copied()
    }

    pub fn term(&self, id: usize) -> &str {
        &self.terms[id].term
    }

    pub fn labels(&self) -> Vec<String> {
        self.terms.iter().map(|t| t.term.clone()).collect()
    }

    /// Sorted ids of the retained terms present in `record`.
    pub fn record_ids(&self, record: &BibRecord) -> Vec<usize> {
        let mut ids: Vec<usize> = record_terms(record, self.field)
            .iter()
            .filter_map(|t| self.id_of(t))
            .collect();
        ids.sort_unstable();
        ids
    }
}

/// Document frequency of every normalized term in the chosen field.
pub fn document_frequencies(corpus: &Corpus, field: KeywordField) -> HashMap<String, usize> {
    let mut df = HashMap::new();
    for record in &corpus.records {
        for term in record_terms(record, field) {
            *df.entry(term).or_insert(0) += 1;
        }
    }
    df
}

/// Builds the vocabulary. `threshold` is clamped to at least 1.
///
/// Exclusions match whole normalized terms only, so `altmetrics` removes the
/// bare keyword but keeps `altmetric attention score`.
pub fn build_vocabulary(
    corpus: &Corpus,
    field: KeywordField,
    threshold: usize,
    exclusions: &[String],
) -> Vocabulary {
    let threshold = threshold.max(1);
    let excluded: BTreeSet<String> = exclusions
        .iter()
        .map(|e| normalize_term(e))
        .filter(|e| !e.is_empty())
        .collect();

    let mut kept: Vec<(String, usize)> = document_frequencies(corpus, field)
        .into_iter()
        .filter(|(term, df)| *df >= threshold && !excluded.contains(term))
        .collect();
    kept.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

    let terms: Vec<Term> = kept
        .into_iter()
        .enumerate()
        .map(|(id, (term, doc_frequency))| Term {
            id,
            term,
            doc_frequency,
        })
        .collect();
    let index = terms.iter().map(|t| (t.term.clone(), t.id)).collect();
    Vocabulary {
        terms,
        index,
        threshold,
        exclusions: excluded.into_iter().collect(),
        field,
    }
}
