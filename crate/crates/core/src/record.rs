//! Web of Science field-tagged plain-text exports.
//!
//! Every line of an export starts with a two-character tag followed by a
//! space and a value. Lines beginning with three spaces continue the most
//! recent tag. Records end with `ER` and the file ends with `EF`:
//!
//! ```text
//! FN Clarivate Analytics Web of Science
//! VR 1.0
//! PT J
//! AU Smith, J
//!    Doe, A
//! DE altmetric attention score;
//!    mendeley readership
//! PY 2020
//! ER
//!
//! EF
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, BufRead, Write};

use indexmap::IndexMap;
use thiserror::Error;

/// Tags that belong to the file header rather than to any record.
const HEADER_TAGS: [&str; 2] = ["FN", "VR"];
const CONTINUATION: &str = "   ";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: usize, reason: String },
    #[error("line {line}: invalid UTF-8")]
    EncodingError { line: usize },
    #[error("read failed")]
    Io(#[from] io::Error),
}

impl ParseError {
    /// The 1-based line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MalformedRecord { line, .. } | ParseError::EncodingError { line } => {
                Some(*line)
            }
            ParseError::Io(_) => None,
        }
    }

    fn malformed(line: usize, reason: impl Into<String>) -> Self {
        ParseError::MalformedRecord {
            line,
            reason: reason.into(),
        }
    }
}

/// One ER-terminated block of an export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BibRecord {
    pub record_index: usize,
    /// Tag to value lines, in order of first appearance.
    pub fields: IndexMap<String, Vec<String>>,
    pub author_keywords: Vec<String>,
    pub keywords_plus: Vec<String>,
    pub year: Option<i32>,
}

impl BibRecord {
    /// Builds a record from its tag map, deriving the keyword lists and year.
    pub fn from_fields(record_index: usize, fields: IndexMap<String, Vec<String>>) -> Self {
        let author_keywords = split_keywords(fields.get("DE"));
        let keywords_plus = split_keywords(fields.get("ID"));
        let year = fields
            .get("PY")
            .and_then(|v| v.first())
            .and_then(|y| y.trim().parse().ok());
        BibRecord {
            record_index,
            fields,
            author_keywords,
            keywords_plus,
            year,
        }
    }

    pub fn field(&self, tag: &str) -> Option<&[String]> {
        self.fields.get(tag).map(Vec::as_slice)
    }
}

fn split_keywords(lines: Option<&Vec<String>>) -> Vec<String> {
    let Some(lines) = lines else {
        return Vec::new();
    };
    lines
        .join(" ")
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub records: Vec<BibRecord>,
    pub source_description: String,
}

impl Corpus {
    pub fn new(records: Vec<BibRecord>, source_description: impl Into<String>) -> Self {
        Corpus {
            records,
            source_description: source_description.into(),
        }
    }

    pub fn record_count(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Parses a field-tagged export.
///
/// Accepts LF or CRLF line endings and an optional UTF-8 byte order mark.
/// Unknown tags are kept in [`BibRecord::fields`].
pub fn parse_export<R: BufRead>(
    mut input: R,
    source_description: impl Into<String>,
) -> Result<Corpus, ParseError> {
    let mut parser = Parser::default();
    let mut buf = Vec::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        if input.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let mut bytes = buf.as_slice();
        if line_no == 1 {
            bytes = bytes.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(bytes);
        }
        let line =
            std::str::from_utf8(bytes).map_err(|_| ParseError::EncodingError { line: line_no })?;
        if parser.feed(line.trim_end(), line_no)? {
            break;
        }
    }
    let records = parser.finish(line_no)?;
    Ok(Corpus::new(records, source_description))
}

/// Convenience wrapper over [`parse_export`] for in-memory text.
pub fn parse_export_str(
    text: &str,
    source_description: impl Into<String>,
) -> Result<Corpus, ParseError> {
    parse_export(text.as_bytes(), source_description)
}

#[derive(Default)]
struct Parser {
    records: Vec<BibRecord>,
    /// Fields of the record being read, `None` between records.
    open: Option<IndexMap<String, Vec<String>>>,
    open_since: usize,
    last_tag: Option<String>,
}

impl Parser {
    /// Consumes one line with line terminator and trailing whitespace
    /// removed. Returns `true` once `EF` is seen.
    fn feed(&mut self, line: &str, line_no: usize) -> Result<bool, ParseError> {
        if line.is_empty() {
            return Ok(false);
        }
        if let Some(rest) = line.strip_prefix(CONTINUATION) {
            let Some(tag) = &self.last_tag else {
                return Err(ParseError::malformed(
                    line_no,
                    "continuation line before any tag",
                ));
            };
            if let Some(fields) = self.open.as_mut() {
                if let Some(values) = fields.get_mut(tag) {
                    values.push(rest.trim_start().to_owned());
                }
            }
            return Ok(false);
        }

        let (tag, value) = split_tag_line(line, line_no)?;
        match tag {
            "EF" => {
                if self.open.is_some() {
                    return Err(ParseError::malformed(
                        line_no,
                        format!("record opened at line {} has no ER", self.open_since),
                    ));
                }
                return Ok(true);
            }
            "ER" => {
                let Some(fields) = self.open.take() else {
                    return Err(ParseError::malformed(line_no, "ER outside of a record"));
                };
                let index = self.records.len();
                self.records.push(BibRecord::from_fields(index, fields));
                self.last_tag = None;
            }
            _ if self.open.is_none() && HEADER_TAGS.contains(&tag) => {
                // File header; continuation lines after it are dropped.
                self.last_tag = Some(tag.to_owned());
            }
            _ => {
                let fields = self.open.get_or_insert_with(|| {
                    self.open_since = line_no;
                    IndexMap::new()
                });
                fields
                    .entry(tag.to_owned())
                    .or_default()
                    .push(value.to_owned());
                self.last_tag = Some(tag.to_owned());
            }
        }
        Ok(false)
    }

    fn finish(self, last_line: usize) -> Result<Vec<BibRecord>, ParseError> {
        if self.open.is_some() {
            return Err(ParseError::malformed(
                last_line,
                format!("record opened at line {} has no ER", self.open_since),
            ));
        }
        Ok(self.records)
    }
}

fn split_tag_line(line: &str, line_no: usize) -> Result<(&str, &str), ParseError> {
    let tag = line
        .get(..2)
        .ok_or_else(|| ParseError::malformed(line_no, "tag line shorter than 2 characters"))?;
    if !tag
        .bytes()
        .all(|b| b.is_ascii_uppercase() || b.is_ascii_digit())
    {
        return Err(ParseError::malformed(
            line_no,
            format!("invalid field tag {tag:?}"),
        ));
    }
    let rest = &line[2..];
    if !rest.is_empty() && !rest.starts_with(' ') {
        return Err(ParseError::malformed(
            line_no,
            format!("field tag {tag:?} not followed by a space"),
        ));
    }
    Ok((tag, rest.trim()))
}

/// Writes a corpus back out in field-tagged layout.
///
/// Each stored value line becomes one output line; the first line of a
/// field carries the tag and the rest are continuation lines.
pub fn write_export<W: Write>(corpus: &Corpus, mut out: W) -> io::Result<()> {
    writeln!(out, "FN Clarivate Analytics Web of Science")?;
    writeln!(out, "VR 1.0")?;
    for record in &corpus.records {
        for (tag, values) in &record.fields {
            let mut values = values.iter();
            match values.next() {
                Some(first) if first.is_empty() => writeln!(out, "{tag}")?,
                Some(first) => writeln!(out, "{tag} {first}")?,
                None => continue,
            }
            for value in values {
                writeln!(out, "{CONTINUATION}{value}")?;
            }
        }
        writeln!(out, "ER")?;
        writeln!(out)?;
    }
    writeln!(out, "EF")
}

/// Corpus-level counts in the shape of a descriptive statistics table.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryTable {
    pub articles: usize,
    pub distinct_author_keywords: usize,
    pub distinct_keywords_plus: usize,
    /// `(first_year, last_year)` over records that carry a PY field.
    pub year_range: Option<(i32, i32)>,
    pub year_histogram: BTreeMap<i32, usize>,
    /// Compound annual growth rate of yearly article counts, in percent.
    pub growth_rate_percent: Option<f64>,
}

pub fn corpus_summary(corpus: &Corpus) -> SummaryTable {
    let distinct = |pick: fn(&BibRecord) -> &Vec<String>| {
        corpus
            .records
            .iter()
            .flat_map(|r| pick(r).iter())
            .map(|k| k.trim().to_lowercase())
            .filter(|k| !k.is_empty())
            .collect::<BTreeSet<_>>()
            .len()
    };

    let mut year_histogram = BTreeMap::new();
    for year in corpus.records.iter().filter_map(|r| r.year) {
        *year_histogram.entry(year).or_insert(0usize) += 1;
    }
    let year_range = match (
        year_histogram.keys().next(),
        year_histogram.keys().next_back(),
    ) {
        (Some(&first), Some(&last)) => Some((first, last)),
        _ => None,
    };
    let growth_rate_percent = year_range.and_then(|(first, last)| {
        growth_rate_percent(year_histogram[&first], year_histogram[&last], last - first)
    });

    SummaryTable {
        articles: corpus.record_count(),
        distinct_author_keywords: distinct(|r| &r.author_keywords),
        distinct_keywords_plus: distinct(|r| &r.keywords_plus),
        year_range,
        year_histogram,
        growth_rate_percent,
    }
}

/// `(last / first)^(1 / years) - 1`, in percent. Undefined for a zero
/// starting count or a span shorter than one year.
pub fn growth_rate_percent(first_count: usize, last_count: usize, years: i32) -> Option<f64> {
    if first_count == 0 || years < 1 {
        return None;
    }
    let ratio = last_count as f64 / first_count as f64;
    Some((ratio.powf(1.0 / f64::from(years)) - 1.0) * 100.0)
}

impl fmt::Display for SummaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let period = match self.year_range {
            Some((a, b)) => format!("{a}-{b}"),
            None => "-".to_owned(),
        };
        let growth = match self.growth_rate_percent {
            Some(g) => format!("{g:.2}"),
            None => "-".to_owned(),
        };
        let rows = [
            ("Period", period),
            ("Articles", self.articles.to_string()),
            ("Annual growth rate %", growth),
            ("Keywords Plus", self.distinct_keywords_plus.to_string()),
            ("Author keywords", self.distinct_author_keywords.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in rows {
            writeln!(f, "{key:<width$}  {value}")?;
        }
        Ok(())
    }
}
