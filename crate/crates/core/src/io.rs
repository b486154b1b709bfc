//! Text formats: Cayley tables as whitespace grids, Rees specifications as
//! JSON documents.
//!
//! Cayley format: first line the order n, then n lines of n space-separated
//! element ids. Example (min on {0,1}):
//!
//! ```text
//! 2
//! 0 0
//! 0 1
//! ```

use crate::algebra::{GroupView, ReesSpec, Semigroup};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parses the Cayley table format. Errors carry 1-based line and column.
pub fn parse_cayley(input: &str) -> Result<Semigroup> {
    let mut lines = input.lines().enumerate();
    let (n, header_line) = loop {
        let Some((idx, raw)) = lines.next() else {
            return Err(Error::parse(1, 1, "missing order header"));
        };
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        let n: usize = text
            .parse()
            .map_err(|_| Error::parse(idx + 1, 1, "order header must be a single number"))?;
        if n == 0 {
            return Err(Error::parse(idx + 1, 1, "order must be positive"));
        }
        break (n, idx);
    };
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (idx, raw) in lines {
        if rows.len() == n {
            if !raw.trim().is_empty() {
                return Err(Error::parse(idx + 1, 1, "unexpected content after the table"));
            }
            continue;
        }
        if raw.trim().is_empty() {
            continue;
        }
        let mut row = Vec::with_capacity(n);
        let mut col_starts = Vec::new();
        let mut chars = raw.char_indices().peekable();
        while let Some(&(byte, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            col_starts.push(byte);
            let mut text = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                text.push(c);
                chars.next();
            }
            let value: usize = text.parse().map_err(|_| {
                Error::parse(idx + 1, byte + 1, format!("bad table entry '{text}'"))
            })?;
            row.push(value);
        }
        if row.len() != n {
            return Err(Error::parse(
                idx + 1,
                1,
                format!("expected {n} entries in this row, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        let line = header_line + 2 + rows.len();
        return Err(Error::parse(
            line,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Semigroup::from_rows(&rows)
}

/// Renders a semigroup in the Cayley format; `parse_cayley` round-trips it.
pub fn format_cayley(s: &Semigroup) -> String {
    let n = s.order();
    let mut out = format!("{n}\n");
    for row in s.cayley().rows() {
        let line = row
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// JSON mirror of a Rees specification. The group is carried as its Cayley
/// table; the sandwich matrix has `i_size` rows of `lambda_size` entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct ReesDocument {
    group_table: Vec<Vec<usize>>,
    lambda_size: usize,
    i_size: usize,
    sandwich: Vec<Vec<usize>>,
}

/// Parses a Rees specification from JSON and validates it fully: table
/// associativity, group axioms, sandwich shape and normalization.
pub fn parse_rees_json(input: &str) -> Result<ReesSpec> {
    let doc: ReesDocument = serde_json::from_str(input)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let base = Semigroup::from_rows(&doc.group_table)?;
    let group = GroupView::from_semigroup(&base)?;
    ReesSpec::new(group, doc.lambda_size, doc.i_size, doc.sandwich)
}

/// Renders a Rees specification as pretty JSON with fixed key order;
/// `parse_rees_json` round-trips it.
pub fn format_rees_json(spec: &ReesSpec) -> String {
    let doc = ReesDocument {
        group_table: spec.group().base().cayley().rows(),
        lambda_size: spec.lambda_size(),
        i_size: spec.i_size(),
        sandwich: spec.sandwich().to_vec(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn cayley_examples_from_the_format_doc() {
        let min2 = parse_cayley("2\n0 0\n0 1\n").unwrap();
        assert_eq!(min2, samples::min2());
        let trivial = parse_cayley("1\n0\n").unwrap();
        assert_eq!(trivial.order(), 1);
        let z2 = parse_cayley("2\n0 1\n1 0\n").unwrap();
        assert!(z2.as_group().is_ok());
    }

    #[test]
    fn cayley_round_trip() {
        for s in [
            samples::min2(),
            samples::symmetric3(),
            samples::rectangular_band(2, 3),
            samples::homogroup3(),
        ] {
            assert_eq!(parse_cayley(&format_cayley(&s)).unwrap(), s);
        }
    }

    #[test]
    fn cayley_tolerates_blank_lines_and_extra_spaces() {
        let s = parse_cayley("\n 2 \n0   0\n\n0 1\n\n").unwrap();
        assert_eq!(s, samples::min2());
    }

    #[test]
    fn cayley_errors_carry_positions() {
        assert_eq!(
            parse_cayley("").unwrap_err(),
            Error::parse(1, 1, "missing order header")
        );
        assert!(matches!(
            parse_cayley("x\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        let err = parse_cayley("2\n0 z\n0 1\n").unwrap_err();
        assert_eq!(err, Error::parse(2, 3, "bad table entry 'z'"));
        let err = parse_cayley("2\n0 0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_cayley("2\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_cayley("2\n0 0\n0 1\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        // Structural failures surface as algebra errors, not parse errors.
        assert!(matches!(
            parse_cayley("2\n0 0\n2 0\n").unwrap_err(),
            Error::EntryOutOfRange { .. }
        ));
        assert!(matches!(
            parse_cayley("2\n0 1\n0 0\n").unwrap_err(),
            Error::NotAssociative { .. }
        ));
    }

    #[test]
    fn rees_json_round_trip() {
        let z2 = samples::cyclic(2).as_group().unwrap();
        let spec = ReesSpec::new(
            z2,
            2,
            2,
            vec![vec![0, 0], vec![0, 1]],
        )
        .unwrap();
        let text = format_rees_json(&spec);
        let back = parse_rees_json(&text).unwrap();
        assert_eq!(back.lambda_size(), 2);
        assert_eq!(back.i_size(), 2);
        assert_eq!(back.sandwich(), spec.sandwich());
        assert_eq!(back.group().base(), spec.group().base());
    }

    #[test]
    fn rees_json_rejects_bad_documents() {
        assert!(matches!(
            parse_rees_json("{").unwrap_err(),
            Error::Parse { .. }
        ));
        // Valid JSON, but the table is not a group.
        let text = r#"{"group_table": [[0, 0], [0, 1]], "lambda_size": 1, "i_size": 1, "sandwich": [[0]]}"#;
        assert!(matches!(
            parse_rees_json(text).unwrap_err(),
            Error::NotAGroup(_)
        ));
        // Group fine, sandwich not normalized.
        let text = r#"{"group_table": [[0, 1], [1, 0]], "lambda_size": 2, "i_size": 1, "sandwich": [[0, 1]]}"#;
        assert!(matches!(
            parse_rees_json(text).unwrap_err(),
            Error::NotNormalized { row: 0, col: 1 }
        ));
    }
}
