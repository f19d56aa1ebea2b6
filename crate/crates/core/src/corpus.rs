//! CSV fixtures and report serialization.
//!
//! Corpus dialect: lines starting with `#` are comments and form the source
//! note; blank lines are ignored; the first data line is the header
//! `chi,a0,a1,...,a51`; each following line is one character column. Fields
//! are decimal integers with an optional leading minus sign. Spaces and tabs
//! around a field are ignored, and `\r\n` line endings are accepted. Nothing
//! else is tolerated.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::Serialize;

use crate::decomp::{
    CharacterColumn, CheckEntry, CheckStatus, RowChecksum, VerificationReport, CHARACTER_COUNT,
    TABLE_DEPTH,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub field: Option<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Some(field) => write!(f, "line {}, field {}: {}", self.line, field, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, field: Option<&str>, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        field: field.map(str::to_owned),
        message: message.into(),
    }
}

/// Transcribed table columns plus their provenance note.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CorpusFile {
    pub columns: Vec<CharacterColumn>,
    pub source_note: String,
}

impl CorpusFile {
    pub fn column(&self, chi: u16) -> Option<&CharacterColumn> {
        self.columns.iter().find(|c| c.chi == chi)
    }
}

/// Lines of a CSV file with their 1-based numbers, split into comments and
/// trimmed data fields.
struct Lines<'a> {
    comments: Vec<&'a str>,
    rows: Vec<(usize, Vec<&'a str>)>,
}

fn split_lines(input: &str) -> Lines<'_> {
    let mut comments = Vec::new();
    let mut rows = Vec::new();
    for (i, raw) in input.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c));
        } else if !line.trim().is_empty() {
            rows.push((i + 1, line.split(',').map(|f| f.trim_matches([' ', '\t'])).collect()));
        }
    }
    Lines { comments, rows }
}

fn parse_int(line: usize, field: &str, text: &str) -> Result<BigInt, ParseError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, Some(field), format!("not an integer: {text:?}")));
    }
    BigInt::from_str(text).map_err(|e| err(line, Some(field), e.to_string()))
}

fn parse_chi(line: usize, text: &str) -> Result<u16, ParseError> {
    let v = parse_int(line, "chi", text)?;
    u16::try_from(&v)
        .ok()
        .filter(|c| (1..=CHARACTER_COUNT).contains(c))
        .ok_or_else(|| err(line, Some("chi"), format!("chi {v} outside 1..=194")))
}

fn bytes_to_str(bytes: &[u8]) -> Result<&str, ParseError> {
    std::str::from_utf8(bytes).map_err(|e| err(0, None, format!("input is not UTF-8: {e}")))
}

fn corpus_header() -> String {
    let mut h = String::from("chi");
    for i in 0..TABLE_DEPTH {
        h.push_str(&format!(",a{i}"));
    }
    h
}

/// Parses the corpus and enforces the column sign pattern.
pub fn parse_corpus(bytes: &[u8]) -> Result<CorpusFile, ParseError> {
    parse(bytes, true)
}

/// Parses the corpus structure only (shape, integers, chi ordering), leaving
/// sign checks to verification.
pub fn parse_corpus_structure(bytes: &[u8]) -> Result<CorpusFile, ParseError> {
    parse(bytes, false)
}

fn parse(bytes: &[u8], check_signs: bool) -> Result<CorpusFile, ParseError> {
    let lines = split_lines(bytes_to_str(bytes)?);
    let mut rows = lines.rows.into_iter();
    let expected_header = corpus_header();
    match rows.next() {
        None => {}
        Some((n, fields)) => {
            if fields.join(",") != expected_header {
                return Err(err(n, None, "expected header chi,a0,...,a51"));
            }
        }
    }
    let mut columns: Vec<CharacterColumn> = Vec::new();
    for (n, fields) in rows {
        if fields.len() != TABLE_DEPTH + 1 {
            return Err(err(
                n,
                None,
                format!(
                    "expected {TABLE_DEPTH} coefficients, found {}",
                    fields.len() - 1
                ),
            ));
        }
        let chi = parse_chi(n, fields[0])?;
        if let Some(prev) = columns.last() {
            if chi == prev.chi || columns.iter().any(|c| c.chi == chi) {
                return Err(err(n, Some("chi"), format!("duplicate chi {chi}")));
            }
            if chi < prev.chi {
                return Err(err(
                    n,
                    Some("chi"),
                    format!("chi {chi} after {}; rows must be increasing", prev.chi),
                ));
            }
        }
        let coeffs = fields[1..]
            .iter()
            .enumerate()
            .map(|(h, f)| parse_int(n, &format!("a{h}"), f))
            .collect::<Result<Vec<_>, _>>()?;
        let col = CharacterColumn::unchecked(chi, coeffs);
        if check_signs {
            if let Some((h, value)) = col.sign_violations().into_iter().next() {
                return Err(err(
                    n,
                    Some(&format!("a{h}")),
                    format!("sign violation: {value}, expected {}", col.slot_rule(h)),
                ));
            }
        }
        columns.push(col);
    }
    Ok(CorpusFile {
        columns,
        source_note: lines.comments.join("\n"),
    })
}

/// Writes a corpus in the dialect [`parse_corpus`] reads.
pub fn emit_corpus(corpus: &CorpusFile) -> String {
    let mut out = String::new();
    if !corpus.source_note.is_empty() {
        for line in corpus.source_note.split('\n') {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&corpus_header());
    out.push('\n');
    for col in &corpus.columns {
        out.push_str(&col.chi.to_string());
        for a in &col.coeffs {
            out.push(',');
            out.push_str(&a.to_string());
        }
        out.push('\n');
    }
    out
}

/// Character degrees keyed by character index.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DegreeFile {
    pub entries: BTreeMap<u16, BigUint>,
}

/// Parses `chi,degree` rows; the header line is optional.
pub fn parse_degrees(bytes: &[u8]) -> Result<DegreeFile, ParseError> {
    let lines = split_lines(bytes_to_str(bytes)?);
    let mut entries = BTreeMap::new();
    for (i, (n, fields)) in lines.rows.into_iter().enumerate() {
        if i == 0 && fields == ["chi", "degree"] {
            continue;
        }
        if fields.len() != 2 {
            return Err(err(n, None, "expected chi,degree"));
        }
        let chi = parse_chi(n, fields[0])?;
        let degree = parse_int(n, "degree", fields[1])?;
        if !degree.is_positive() {
            return Err(err(n, Some("degree"), format!("degree {degree} is not positive")));
        }
        if chi == 1 && !degree.is_one() {
            return Err(err(n, Some("degree"), "the trivial character has degree 1"));
        }
        let degree = degree.to_biguint().expect("checked positive");
        if entries.insert(chi, degree).is_some() {
            return Err(err(n, Some("chi"), format!("duplicate chi {chi}")));
        }
    }
    Ok(DegreeFile { entries })
}

/// Parses `chi,sum,weighted_sum` rows; the header line is optional.
pub fn parse_checksums(bytes: &[u8]) -> Result<BTreeMap<u16, RowChecksum>, ParseError> {
    let lines = split_lines(bytes_to_str(bytes)?);
    let mut out = BTreeMap::new();
    for (i, (n, fields)) in lines.rows.into_iter().enumerate() {
        if i == 0 && fields == ["chi", "sum", "weighted_sum"] {
            continue;
        }
        if fields.len() != 3 {
            return Err(err(n, None, "expected chi,sum,weighted_sum"));
        }
        let chi = parse_chi(n, fields[0])?;
        let sum = RowChecksum {
            sum: parse_int(n, "sum", fields[1])?,
            weighted_sum: parse_int(n, "weighted_sum", fields[2])?,
        };
        if out.insert(chi, sum).is_some() {
            return Err(err(n, Some("chi"), format!("duplicate chi {chi}")));
        }
    }
    Ok(out)
}

pub fn emit_checksums(corpus: &CorpusFile) -> String {
    let mut out = String::from("chi,sum,weighted_sum\n");
    for col in &corpus.columns {
        let s = RowChecksum::of(&col.coeffs);
        out.push_str(&format!("{},{},{}\n", col.chi, s.sum, s.weighted_sum));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    overall: CheckStatus,
    checks: &'a [CheckEntry],
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    warnings: &'a [String],
}

/// Deterministic rendering of a report. Entries are emitted in the order
/// held; [`crate::decomp::verify_corpus`] sorts them.
pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let doc = ReportJson {
                overall: report.overall(),
                checks: &report.checks,
                warnings: &report.warnings,
            };
            serde_json::to_string(&doc).expect("report serializes")
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&format!("CHECK {}", c.name));
                if let Some(chi) = c.chi {
                    out.push_str(&format!(" chi={chi}"));
                }
                if let Some(h) = c.h {
                    out.push_str(&format!(" h={h}"));
                }
                out.push_str(&format!(" status={}", c.status));
                if c.status == CheckStatus::Fail {
                    if let Some(e) = &c.expected {
                        out.push_str(&format!(" expected={e}"));
                    }
                    if let Some(a) = &c.actual {
                        out.push_str(&format!(" actual={a}"));
                    }
                }
                out.push('\n');
            }
            for w in &report.warnings {
                out.push_str(&format!("WARNING {w}\n"));
            }
            let failed = report.failures().count();
            out.push_str(&format!(
                "OVERALL status={} checks={} failed={}\n",
                report.overall(),
                report.checks.len(),
                failed
            ));
            out
        }
    }
}
