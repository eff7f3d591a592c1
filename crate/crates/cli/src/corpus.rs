//! The bundled example tables: parsing the row files, instantiating
//! parameters, and running every entry against the obstruction pipeline.
//!
//! Each table file starts with file-level `vars:`/`t:` defaults, then one
//! `[row]` block per example.  A row carries a stable id, an optional label,
//! parameter lower bounds (`params: k >= 2`), the matrix template, and the
//! published `tau`/`eu` columns as symbolic expressions.  Rows judged
//! unusable are flagged (`suspect`, `parse-exempt`) with a note and are
//! skipped by the runner rather than dropped, so the report shows them.

use crate::commands::RunConfig;
use crate::document::{descriptor_of, eval_int_expr, instantiate, Document, MatrixEntry};
use eids_core::error::Error;
use eids_core::invariants::{InvariantName, InvariantReport, Provenance};
use eids_core::obstruction::{eu_dispatch, DispatchOptions};

const TABLE1: &str = include_str!("../corpus/table1.txt");
const TABLE2: &str = include_str!("../corpus/table2.txt");

/// Why a row is excluded from the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFlag {
    /// The printed data is internally inconsistent at the minimal parameter.
    Suspect,
    /// The printed matrix is not parseable and is kept verbatim.
    ParseExempt,
}

impl RowFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            RowFlag::Suspect => "suspect",
            RowFlag::ParseExempt => "parse-exempt",
        }
    }
}

/// One bundled example row.
#[derive(Debug, Clone)]
pub struct CorpusRow {
    pub id: String,
    pub label: Option<String>,
    pub vars: Vec<String>,
    pub t: usize,
    /// Matrix entry templates, possibly mentioning parameters.
    pub matrix: Vec<Vec<String>>,
    /// Parameter names with their smallest admissible values.
    pub params: Vec<(String, i64)>,
    /// Published Tjurina number, symbolic in the parameters.
    pub tau: String,
    /// Published Euler obstruction, symbolic in the parameters.
    pub eu: String,
    pub flag: Option<RowFlag>,
    pub note: Option<String>,
}

impl CorpusRow {
    /// Parameter bindings to run: none for parameter-free rows, otherwise
    /// all-minimal and all-minimal-plus-one.
    pub fn instantiations(&self) -> Vec<Vec<(String, i64)>> {
        if self.params.is_empty() {
            return vec![Vec::new()];
        }
        let mins = self.params.clone();
        let next = self.params.iter().map(|(n, v)| (n.clone(), v + 1)).collect();
        vec![mins, next]
    }

    /// Instantiate the matrix template under a parameter binding.
    pub fn document(
        &self,
        binding: &[(String, i64)],
        supplied: Vec<InvariantReport>,
    ) -> Result<Document, String> {
        let mut rows = Vec::with_capacity(self.matrix.len());
        for row in &self.matrix {
            let mut out = Vec::with_capacity(row.len());
            for raw in row {
                let text = instantiate(raw, binding)?;
                out.push(MatrixEntry { text, offset: 0, shifted: true });
            }
            rows.push(out);
        }
        Ok(Document { vars: self.vars.clone(), t: self.t, rows, supplied })
    }
}

/// Parse one table file.  This is bundled data, so errors are plain strings
/// (a test keeps the bundled files well-formed).
pub fn parse_table(text: &str) -> Result<Vec<CorpusRow>, String> {
    let mut default_vars: Option<Vec<String>> = None;
    let mut default_t: Option<usize> = None;
    let mut rows: Vec<CorpusRow> = Vec::new();
    let mut current: Option<CorpusRow> = None;
    let mut in_matrix = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fail = |m: String| format!("table line {}: {m}", lineno + 1);
        if trimmed == "[row]" {
            if let Some(row) = current.take() {
                rows.push(finish_row(row, &fail)?);
            }
            let vars = default_vars.clone().ok_or_else(|| fail("no file-level vars".into()))?;
            let t = default_t.ok_or_else(|| fail("no file-level t".into()))?;
            current = Some(CorpusRow {
                id: String::new(),
                label: None,
                vars,
                t,
                matrix: Vec::new(),
                params: Vec::new(),
                tau: String::new(),
                eu: String::new(),
                flag: None,
                note: None,
            });
            in_matrix = false;
            continue;
        }
        let Some(colon) = line.find(':') else {
            if in_matrix {
                let row = current.as_mut().expect("in_matrix only inside a row");
                row.matrix.push(trimmed.split(',').map(|e| e.trim().to_string()).collect());
                continue;
            }
            return Err(fail(format!("expected `key: value`, got `{trimmed}`")));
        };
        let key = line[..colon].trim();
        let value = line[colon + 1..].trim();
        if key != "matrix" {
            in_matrix = false;
        }
        match (key, &mut current) {
            ("vars", None) => {
                default_vars = Some(value.split(',').map(|v| v.trim().to_string()).collect())
            }
            ("t", None) => {
                default_t = Some(value.parse().map_err(|_| fail(format!("bad t `{value}`")))?)
            }
            (_, None) => return Err(fail(format!("key `{key}` before the first [row]"))),
            ("id", Some(row)) => row.id = value.to_string(),
            ("label", Some(row)) => row.label = Some(value.to_string()),
            ("matrix", Some(_)) => in_matrix = true,
            ("params", Some(row)) => {
                for piece in value.split(',') {
                    let (name, min) = piece
                        .split_once(">=")
                        .ok_or_else(|| fail(format!("expected `name >= min` in `{piece}`")))?;
                    let min: i64 = min
                        .trim()
                        .parse()
                        .map_err(|_| fail(format!("bad minimum in `{piece}`")))?;
                    row.params.push((name.trim().to_string(), min));
                }
            }
            ("tau", Some(row)) => row.tau = value.to_string(),
            ("eu", Some(row)) => row.eu = value.to_string(),
            ("flag", Some(row)) => {
                row.flag = Some(match value {
                    "suspect" => RowFlag::Suspect,
                    "parse-exempt" => RowFlag::ParseExempt,
                    other => return Err(fail(format!("unknown flag `{other}`"))),
                })
            }
            ("note", Some(row)) => row.note = Some(value.to_string()),
            (other, Some(_)) => return Err(fail(format!("unknown row key `{other}`"))),
        }
    }
    if let Some(row) = current.take() {
        rows.push(finish_row(row, &|m| format!("table end: {m}"))?);
    }
    Ok(rows)
}

fn finish_row(
    row: CorpusRow,
    fail: &dyn Fn(String) -> String,
) -> Result<CorpusRow, String> {
    if row.id.is_empty() {
        return Err(fail("row without id".into()));
    }
    if row.matrix.is_empty() || row.tau.is_empty() || row.eu.is_empty() {
        return Err(fail(format!("row {} is missing matrix, tau, or eu", row.id)));
    }
    let width = row.matrix[0].len();
    if row.matrix.iter().any(|r| r.len() != width) {
        return Err(fail(format!("row {} has a ragged matrix", row.id)));
    }
    Ok(row)
}

/// All bundled rows, in file order (first table, then the second).
pub fn builtin_rows() -> Vec<CorpusRow> {
    let mut rows = parse_table(TABLE1).expect("bundled table 1 is well-formed");
    rows.extend(parse_table(TABLE2).expect("bundled table 2 is well-formed"));
    rows
}

/// Outcome classification for one executed (or skipped) entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    SuppliedMatch,
    Mismatch,
    SkippedSuspect,
    SkippedParseExempt,
    SkippedResource,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::SuppliedMatch => "SUPPLIED-MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::SkippedSuspect => "SKIPPED(suspect)",
            Verdict::SkippedParseExempt => "SKIPPED(parse-exempt)",
            Verdict::SkippedResource => "SKIPPED(resource-limit)",
        }
    }
}

/// One line of the corpus report.
#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub id: String,
    pub label: Option<String>,
    /// `k=2,l=3` style binding label; `-` when the row has no parameters.
    pub params: String,
    pub expected: Option<i64>,
    pub got: Option<i64>,
    pub verdict: Verdict,
    pub note: Option<String>,
    /// Invariants the obstruction run consumed, with provenance.
    pub inputs: Vec<InvariantReport>,
}

fn params_label(binding: &[(String, i64)]) -> String {
    if binding.is_empty() {
        return "-".to_string();
    }
    binding.iter().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(",")
}

/// Run one instantiated row.  The published obstruction, shifted down by
/// one, doubles as the supplied slice characteristic so entries whose own
/// computation exceeds the work budget still finish with a supplied value.
pub fn run_entry(row: &CorpusRow, binding: &[(String, i64)], cfg: &RunConfig) -> EntryOutcome {
    let params = params_label(binding);
    let base = EntryOutcome {
        id: row.id.clone(),
        label: row.label.clone(),
        params,
        expected: None,
        got: None,
        verdict: Verdict::Mismatch,
        note: None,
        inputs: Vec::new(),
    };
    let expected = match eval_int_expr(&row.eu, binding) {
        Ok(v) => v,
        Err(m) => return EntryOutcome { note: Some(m), ..base },
    };
    let base = EntryOutcome { expected: Some(expected), ..base };
    let supplied =
        vec![InvariantReport::corpus(InvariantName::ChiTilde, expected - 1, &row.id)];
    let doc = match row.document(binding, supplied) {
        Ok(d) => d,
        Err(m) => return EntryOutcome { note: Some(m), ..base },
    };
    let (_ctx, x) = match descriptor_of(&doc) {
        Ok(p) => p,
        Err(e) => return EntryOutcome { note: Some(e.to_string()), ..base },
    };
    let limits = cfg.limits();
    match eu_dispatch(&x, cfg.seed, &doc.supplied, &DispatchOptions::default(), &limits) {
        Ok(r) => {
            let used_supplied = r
                .inputs
                .iter()
                .any(|i| !matches!(i.provenance, Provenance::Computed { .. }));
            let verdict = if r.value != expected {
                Verdict::Mismatch
            } else if used_supplied {
                Verdict::SuppliedMatch
            } else {
                Verdict::Match
            };
            EntryOutcome { got: Some(r.value), verdict, inputs: r.inputs, ..base }
        }
        Err(Error::ResourceLimit(m)) => EntryOutcome {
            verdict: Verdict::SkippedResource,
            note: Some(m),
            ..base
        },
        Err(e) => EntryOutcome { note: Some(e.to_string()), ..base },
    }
}

/// Run every bundled row (optionally filtered by an id/label substring) and
/// collect outcomes in table order.
pub fn run_rows(only: Option<&str>, cfg: &RunConfig) -> Vec<EntryOutcome> {
    let mut out = Vec::new();
    for row in builtin_rows() {
        if let Some(filter) = only {
            let label_hit = row.label.as_deref().is_some_and(|l| l.contains(filter));
            if !row.id.contains(filter) && !label_hit {
                continue;
            }
        }
        if let Some(flag) = row.flag {
            let verdict = match flag {
                RowFlag::Suspect => Verdict::SkippedSuspect,
                RowFlag::ParseExempt => Verdict::SkippedParseExempt,
            };
            out.push(EntryOutcome {
                id: row.id.clone(),
                label: row.label.clone(),
                params: "-".to_string(),
                expected: None,
                got: None,
                verdict,
                note: row.note.clone(),
                inputs: Vec::new(),
            });
            continue;
        }
        for binding in row.instantiations() {
            out.push(run_entry(&row, &binding, cfg));
        }
    }
    out
}

/// Bundled rows whose matrix, under some admissible binding, matches the
/// given document's matrix entry-for-entry; used to point at a row that
/// could supply a missing invariant.
pub fn rows_matching(doc: &Document) -> Vec<String> {
    use eids_core::poly::{parse_poly, VarContext};
    let Ok(ctx) = VarContext::new(doc.vars.iter().map(String::as_str)) else {
        return Vec::new();
    };
    let canon = |rows: &[Vec<String>]| -> Option<Vec<String>> {
        let mut out = Vec::new();
        for row in rows {
            for entry in row {
                out.push(parse_poly(&ctx, entry).ok()?.to_string());
            }
        }
        Some(out)
    };
    let doc_rows: Vec<Vec<String>> =
        doc.rows.iter().map(|r| r.iter().map(|e| e.text.clone()).collect()).collect();
    let Some(target) = canon(&doc_rows) else { return Vec::new() };
    let mut hits = Vec::new();
    for row in builtin_rows() {
        if row.flag.is_some()
            || row.t != doc.t
            || row.vars.len() != doc.vars.len()
            || row.vars.iter().any(|v| !doc.vars.contains(v))
        {
            continue;
        }
        for binding in row.instantiations() {
            let inst: Option<Vec<Vec<String>>> = row
                .matrix
                .iter()
                .map(|r| r.iter().map(|e| instantiate(e, &binding).ok()).collect())
                .collect();
            let Some(inst) = inst else { continue };
            if inst.iter().map(|r| r.len()).sum::<usize>() != target.len() {
                continue;
            }
            if canon(&inst).as_deref() == Some(&target[..]) {
                hits.push(row.id.clone());
                break;
            }
        }
    }
    hits
}
