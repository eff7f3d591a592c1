//! Rendering helpers shared by the commands, plus a parser for the
//! line-oriented machine format so tests (and scripts) can round-trip it.
//!
//! Machine reports are plain text, one `key: value` pair per line.  Values
//! that carry sub-fields (`invariant:`, `stratum:`, `entry:`) use
//! space-separated `k=v` tokens; a trailing `method=` or `note=` token
//! absorbs the rest of the line, so free text never needs quoting.

use eids_core::invariants::{InvariantReport, Provenance};

/// First line of every machine report.
pub const FORMAT_LINE: &str = "format: eids-report 1";

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Header lines common to all machine reports.
pub fn machine_header(command: &str, file: Option<&str>, seed: u64) -> Vec<String> {
    let mut lines = vec![FORMAT_LINE.to_string(), format!("command: {command}")];
    if let Some(f) = file {
        lines.push(format!("file: {f}"));
    }
    lines.push(format!("seed: {seed}"));
    lines
}

/// The `k=v` token run describing one invariant report, shared by the
/// `invariant:` and `entry-input:` line forms.
pub fn invariant_tokens(rep: &InvariantReport) -> String {
    let head = format!("name={} value={}", rep.name, rep.value);
    match &rep.provenance {
        Provenance::Computed { seed, method } => {
            format!("{head} prov=computed seed={seed} method={method}")
        }
        Provenance::Supplied => format!("{head} prov=supplied"),
        Provenance::Corpus(row) => format!("{head} prov=corpus row={row}"),
    }
}

/// Machine rendering of one invariant report.
pub fn invariant_machine(rep: &InvariantReport) -> String {
    format!("invariant: {}", invariant_tokens(rep))
}

/// Human rendering of one invariant report, indented as a list item.
pub fn invariant_human(rep: &InvariantReport) -> String {
    format!("  {rep}")
}

/// Split a machine report into `(key, value)` pairs, one per non-empty
/// line.  Fails on a line without `: `.
pub fn parse_machine_report(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(": ")
            .ok_or_else(|| format!("machine line without `: ` separator: `{line}`"))?;
        out.push((key.to_string(), value.to_string()));
    }
    Ok(out)
}

/// First value for `key` in a parsed report.
pub fn report_get<'a>(fields: &'a [(String, String)], key: &str) -> Option<&'a str> {
    fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

/// Every value for `key`, in order.
pub fn report_all<'a>(fields: &'a [(String, String)], key: &str) -> Vec<&'a str> {
    fields.iter().filter(|(k, _)| k == key).map(|(_, v)| v.as_str()).collect()
}

/// Split a sub-field value into `k=v` tokens.  `method` and `note` consume
/// the remainder of the line.
pub fn kv_tokens(value: &str) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut rest = value.trim();
    while !rest.is_empty() {
        let eq = match rest.find('=') {
            Some(e) => e,
            None => break,
        };
        let key = rest[..eq].trim().to_string();
        let tail = &rest[eq + 1..];
        if key == "method" || key == "note" {
            out.push((key, tail.trim().to_string()));
            break;
        }
        let end = tail.find(' ').unwrap_or(tail.len());
        out.push((key, tail[..end].to_string()));
        rest = tail[end..].trim_start();
    }
    out
}

/// Look up one token key in a `kv_tokens` result.
pub fn token_get<'a>(tokens: &'a [(String, String)], key: &str) -> Option<&'a str> {
    tokens.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

#[cfg(test)]
mod tests {
    use super::*;
    use eids_core::invariants::InvariantName;

    #[test]
    fn invariant_lines_round_trip() {
        let reps = [
            InvariantReport::computed(InvariantName::Mu, -3, 7, "sliced singular locus"),
            InvariantReport::supplied(InvariantName::ChiTilde, -1),
            InvariantReport::corpus(InvariantName::ChiTilde, 1, "t1r05"),
        ];
        for rep in &reps {
            let line = invariant_machine(rep);
            let fields = parse_machine_report(&line).unwrap();
            let tokens = kv_tokens(report_get(&fields, "invariant").unwrap());
            assert_eq!(token_get(&tokens, "name"), Some(rep.name.as_str()));
            assert_eq!(token_get(&tokens, "value").unwrap().parse::<i64>(), Ok(rep.value));
            match &rep.provenance {
                Provenance::Computed { seed, method } => {
                    assert_eq!(token_get(&tokens, "prov"), Some("computed"));
                    assert_eq!(token_get(&tokens, "seed").unwrap().parse::<u64>(), Ok(*seed));
                    assert_eq!(token_get(&tokens, "method"), Some(method.as_str()));
                }
                Provenance::Supplied => assert_eq!(token_get(&tokens, "prov"), Some("supplied")),
                Provenance::Corpus(row) => {
                    assert_eq!(token_get(&tokens, "prov"), Some("corpus"));
                    assert_eq!(token_get(&tokens, "row"), Some(row.as_str()));
                }
            }
        }
    }

    #[test]
    fn method_token_keeps_spaces() {
        let tokens = kv_tokens("name=nu value=2 prov=computed seed=0 method=polar recursion");
        assert_eq!(token_get(&tokens, "method"), Some("polar recursion"));
    }

    #[test]
    fn report_lines_split_on_first_separator() {
        let fields = parse_machine_report("a: b: c\n\nkey: value\n").unwrap();
        assert_eq!(fields[0], ("a".to_string(), "b: c".to_string()));
        assert_eq!(report_get(&fields, "key"), Some("value"));
        assert!(parse_machine_report("no separator").is_err());
    }
}
