//! The input document format: a small line-oriented description of a
//! matrix germ, with optional integer parameters and supplied invariants.
//!
//! ```text
//! # 2x3 matrix germ in C^4
//! vars: x, y, z, w
//! t: 2
//! matrix:
//!   z, y+w, x
//!   w, x, y
//! supplied: chi_tilde = -1
//! ```
//!
//! `#` starts a comment, blank lines are skipped, and any line containing
//! `:` outside the matrix block is a `key: value` line.  Matrix entries may
//! mention parameters declared under `params:` either as bare names or as
//! brace expressions (`x^{k+1}`), which are substituted before parsing.
//! All reported byte positions index into the original document text.

use eids_core::eids::EidsDescriptor;
use eids_core::error::{Error, Result};
use eids_core::groebner::PolyMatrix;
use eids_core::invariants::{InvariantName, InvariantReport};
use eids_core::poly::{parse_poly, VarContext};

/// One matrix entry: its (possibly parameter-substituted) text and where
/// the entry started in the source document.
#[derive(Debug, Clone)]
pub struct MatrixEntry {
    pub text: String,
    pub offset: usize,
    /// Whether substitution changed the text, making inner parse positions
    /// approximate.
    pub shifted: bool,
}

/// A parsed input document.
#[derive(Debug, Clone)]
pub struct Document {
    pub vars: Vec<String>,
    pub t: usize,
    pub rows: Vec<Vec<MatrixEntry>>,
    pub supplied: Vec<InvariantReport>,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

/// Lines of `text` paired with their starting byte offsets, trailing
/// newline and carriage return removed.
fn lines_with_offsets(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.strip_suffix('\n').unwrap_or(raw);
        let line = line.strip_suffix('\r').unwrap_or(line);
        out.push((offset, line));
        offset += raw.len();
    }
    out
}

/// Strip a `#` comment, keeping the prefix.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Offset of the first non-space byte of `s` relative to its start.
fn lead_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

/// Parse `name = integer` pairs separated by commas, returning each with
/// the offset of its name.
fn parse_pairs(value: &str, value_off: usize) -> Result<Vec<(String, i64, usize)>> {
    let mut out = Vec::new();
    let mut cursor = 0;
    for piece in value.split(',') {
        let piece_off = value_off + cursor + lead_ws(piece);
        let body = piece.trim();
        if body.is_empty() {
            return Err(syntax(piece_off, "empty assignment"));
        }
        let eq = body
            .find('=')
            .ok_or_else(|| syntax(piece_off, format!("expected `name = integer`, got `{body}`")))?;
        let name = body[..eq].trim();
        let num = body[eq + 1..].trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(syntax(piece_off, format!("bad name `{name}`")));
        }
        let value: i64 = num
            .parse()
            .map_err(|_| syntax(piece_off, format!("bad integer `{num}` for `{name}`")))?;
        out.push((name.to_string(), value, piece_off));
        cursor += piece.len() + 1;
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut vars: Option<Vec<String>> = None;
    let mut t: Option<usize> = None;
    let mut raw_rows: Vec<Vec<(usize, String)>> = Vec::new();
    let mut params: Vec<(String, i64)> = Vec::new();
    let mut supplied: Vec<InvariantReport> = Vec::new();
    let mut seen_matrix = false;
    let mut in_matrix = false;

    for (line_off, raw_line) in lines_with_offsets(text) {
        let line = strip_comment(raw_line);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(colon) = line.find(':') {
            in_matrix = false;
            let key_off = line_off + lead_ws(line);
            let key = line[..colon].trim();
            let value = &line[colon + 1..];
            let value_off = line_off + colon + 1 + lead_ws(value);
            let value_trim = value.trim();
            match key {
                "vars" => {
                    if vars.is_some() {
                        return Err(syntax(key_off, "duplicate `vars` key"));
                    }
                    let names: Vec<String> =
                        value_trim.split(',').map(|v| v.trim().to_string()).collect();
                    if names.is_empty() || names.iter().any(|n| n.is_empty()) {
                        return Err(syntax(value_off, "expected a comma-separated variable list"));
                    }
                    vars = Some(names);
                }
                "t" => {
                    if t.is_some() {
                        return Err(syntax(key_off, "duplicate `t` key"));
                    }
                    let v: usize = value_trim
                        .parse()
                        .map_err(|_| syntax(value_off, format!("bad integer `{value_trim}`")))?;
                    t = Some(v);
                }
                "matrix" => {
                    if seen_matrix {
                        return Err(syntax(key_off, "duplicate `matrix` key"));
                    }
                    if !value_trim.is_empty() {
                        return Err(syntax(
                            value_off,
                            "matrix entries belong on the lines after `matrix:`",
                        ));
                    }
                    seen_matrix = true;
                    in_matrix = true;
                }
                "params" => {
                    for (name, value, _) in parse_pairs(value_trim, value_off)? {
                        if params.iter().any(|(n, _)| *n == name) {
                            return Err(syntax(value_off, format!("duplicate parameter `{name}`")));
                        }
                        params.push((name, value));
                    }
                }
                "supplied" => {
                    for (name, value, off) in parse_pairs(value_trim, value_off)? {
                        let inv = InvariantName::parse(&name)
                            .ok_or_else(|| syntax(off, format!("unknown invariant `{name}`")))?;
                        supplied.push(InvariantReport::supplied(inv, value));
                    }
                }
                _ => return Err(syntax(key_off, format!("unknown key `{key}`"))),
            }
        } else if in_matrix {
            let mut row = Vec::new();
            let mut cursor = 0;
            for piece in line.split(',') {
                let entry_off = line_off + cursor + lead_ws(piece);
                let body = piece.trim();
                if body.is_empty() {
                    return Err(syntax(entry_off, "empty matrix entry"));
                }
                row.push((entry_off, body.to_string()));
                cursor += piece.len() + 1;
            }
            raw_rows.push(row);
        } else {
            return Err(syntax(
                line_off + lead_ws(line),
                "expected a `key: value` line (matrix rows go after `matrix:`)",
            ));
        }
    }

    let vars = vars.ok_or_else(|| syntax(0, "missing required key `vars`"))?;
    let t = t.ok_or_else(|| syntax(0, "missing required key `t`"))?;
    if raw_rows.is_empty() {
        return Err(syntax(0, "missing matrix rows (use `matrix:` followed by entry lines)"));
    }
    let width = raw_rows[0].len();
    for row in &raw_rows {
        if row.len() != width {
            return Err(syntax(row[0].0, format!("ragged matrix: expected {width} entries")));
        }
    }

    let mut rows = Vec::with_capacity(raw_rows.len());
    for row in raw_rows {
        let mut entries = Vec::with_capacity(width);
        for (offset, raw) in row {
            let text = instantiate(&raw, &params).map_err(|m| syntax(offset, m))?;
            let shifted = text != raw;
            entries.push(MatrixEntry { text, offset, shifted });
        }
        rows.push(entries);
    }

    Ok(Document { vars, t, rows, supplied })
}

/// Build the variable context and matrix germ a document describes.
pub fn descriptor_of(doc: &Document) -> Result<(VarContext, EidsDescriptor)> {
    let ctx = VarContext::new(doc.vars.iter().map(String::as_str))?;
    let mut rows = Vec::with_capacity(doc.rows.len());
    for (r, row) in doc.rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (c, entry) in row.iter().enumerate() {
            let poly = parse_poly(&ctx, &entry.text).map_err(|e| {
                let (inner_pos, message) = match e {
                    Error::Syntax { position, message } => (position, message),
                    Error::UnknownVariable(v) => (0, format!("unknown variable `{v}`")),
                    other => (0, other.to_string()),
                };
                let position =
                    if entry.shifted { entry.offset } else { entry.offset + inner_pos };
                syntax(position, format!("matrix row {} column {}: {message}", r + 1, c + 1))
            })?;
            out.push(poly);
        }
        rows.push(out);
    }
    let matrix = PolyMatrix::new(&ctx, rows)?;
    let x = EidsDescriptor::new(&ctx, matrix, doc.t)?;
    Ok((ctx, x))
}

/// Substitute parameters into a template: `{expr}` evaluates the brace
/// content, and bare identifiers equal to a parameter name are replaced by
/// its value.
pub fn instantiate(
    template: &str,
    params: &[(String, i64)],
) -> std::result::Result<String, String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .map(|i| i + open)
            .ok_or_else(|| "unclosed `{` in matrix entry".to_string())?;
        let value = eval_int_expr(&rest[open + 1..close], params)?;
        out.push_str(&value.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    if out.contains('}') {
        return Err("`}` without matching `{`".to_string());
    }
    Ok(replace_idents(&out, params))
}

/// Replace maximal alphanumeric runs that exactly match a parameter name.
fn replace_idents(s: &str, params: &[(String, i64)]) -> String {
    if params.is_empty() {
        return s.to_string();
    }
    let mut out = String::with_capacity(s.len());
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        if let Some((_, v)) = params.iter().find(|(n, _)| n == word) {
            out.push_str(&v.to_string());
        } else {
            out.push_str(word);
        }
        word.clear();
    };
    for c in s.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            word.push(c);
        } else {
            flush(&mut word, &mut out);
            out.push(c);
        }
    }
    flush(&mut word, &mut out);
    out
}

/// Evaluate an integer expression over `+`, `-`, `*`, parentheses, literal
/// integers, and parameter names.
pub fn eval_int_expr(
    s: &str,
    params: &[(String, i64)],
) -> std::result::Result<i64, String> {
    let mut p = ExprParser { s: s.as_bytes(), pos: 0, params };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(format!("unexpected `{}` in expression `{s}`", &s[p.pos..]));
    }
    Ok(v)
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
    params: &'a [(String, i64)],
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> std::result::Result<i64, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_add(rhs).ok_or("expression overflow")?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_sub(rhs).ok_or("expression overflow")?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<i64, String> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = acc.checked_mul(rhs).ok_or("expression overflow")?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> std::result::Result<i64, String> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("missing `)`".to_string());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                std::str::from_utf8(&self.s[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| "integer overflow".to_string())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                self.params
                    .iter()
                    .find(|(n, _)| n == name)
                    .map(|(_, v)| *v)
                    .ok_or_else(|| format!("unknown parameter `{name}`"))
            }
            other => Err(match other {
                Some(c) => format!("unexpected `{}`", c as char),
                None => "unexpected end of expression".to_string(),
            }),
        }
    }
}
