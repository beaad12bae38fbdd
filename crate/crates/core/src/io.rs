//! Text formats: Cayley tables, norm tables and matrices.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Errors
//! carry 1-based line and column numbers.

use thiserror::Error;

use crate::matrix::RatMatrix;
use crate::rational::{format_rat, parse_rat, Rat};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn integer(&self) -> Result<i64, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected an integer, found `{}`", self.text)))
    }

    fn count(&self) -> Result<usize, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected a nonnegative count, found `{}`", self.text)))
    }

    fn rational(&self) -> Result<Rat, ParseError> {
        parse_rat(self.text).map_err(|e| self.error(e.to_string()))
    }
}

/// Content lines with their tokens.
fn lines(input: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return None;
            }
            let mut tokens = Vec::new();
            let mut rest = line;
            let mut offset = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let tail = &rest[start..];
                let end = tail.find(char::is_whitespace).unwrap_or(tail.len());
                tokens.push(Token {
                    line: i + 1,
                    column: line[..offset + start].chars().count() + 1,
                    text: &tail[..end],
                });
                offset += start + end;
                rest = &tail[end..];
            }
            Some((i + 1, tokens))
        })
        .collect()
}

fn eof(input: &str, message: impl Into<String>) -> ParseError {
    ParseError {
        line: input.lines().count() + 1,
        column: 1,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyFile {
    /// Raw entries; may be out of range or ragged until validated.
    pub table: Vec<Vec<i64>>,
    pub labels: Option<Vec<Rat>>,
}

impl CayleyFile {
    pub fn into_semigroup(self) -> Result<FiniteSemigroup, crate::semigroup::SemigroupError> {
        let s = FiniteSemigroup::from_raw(&self.table)?;
        match self.labels {
            Some(labels) => s.with_labels(labels),
            None => Ok(s),
        }
    }
}

/// Line 1: the order `n`. Next `n` lines: the rows of the product table.
/// Optionally a `labels:` line followed by `n` labels (same or later lines).
pub fn parse_cayley(input: &str) -> Result<CayleyFile, ParseError> {
    let lines = lines(input);
    let mut it = lines.iter();
    let (_, header) = it.next().ok_or_else(|| eof(input, "missing order line"))?;
    let order = header[0].count()?;
    if let Some(extra) = header.get(1) {
        return Err(extra.error("unexpected token after the order"));
    }
    if order == 0 {
        return Err(header[0].error("order must be positive"));
    }

    let mut table = Vec::with_capacity(order);
    for _ in 0..order {
        let (_, tokens) = it
            .next()
            .ok_or_else(|| eof(input, format!("expected {order} table rows, found {}", table.len())))?;
        if tokens[0].text.starts_with("labels:") {
            return Err(tokens[0].error(format!("expected {order} table rows, found {}", table.len())));
        }
        table.push(tokens.iter().map(Token::integer).collect::<Result<Vec<_>, _>>()?);
    }

    let Some((_, tokens)) = it.next() else {
        return Ok(CayleyFile { table, labels: None });
    };
    let head = &tokens[0];
    let Some(inline) = head.text.strip_prefix("labels:") else {
        return Err(head.error("expected `labels:` or end of input"));
    };
    let mut labels = Vec::with_capacity(order);
    if !inline.is_empty() {
        let t = Token {
            line: head.line,
            column: head.column + "labels:".len(),
            text: inline,
        };
        labels.push(t.rational()?);
    }
    for t in tokens[1..].iter().chain(it.flat_map(|(_, ts)| ts.iter())) {
        if labels.len() == order {
            return Err(t.error(format!("more than {order} labels")));
        }
        labels.push(t.rational()?);
    }
    if labels.len() != order {
        return Err(eof(input, format!("expected {order} labels, found {}", labels.len())));
    }
    Ok(CayleyFile {
        table,
        labels: Some(labels),
    })
}

pub fn format_cayley(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        let cells: Vec<String> = labels.iter().map(format_rat).collect();
        out.push_str("labels: ");
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// One rational per line, index-aligned with the semigroup.
pub fn parse_norm_values(input: &str) -> Result<Vec<Rat>, ParseError> {
    lines(input)
        .iter()
        .map(|(_, tokens)| {
            if let Some(extra) = tokens.get(1) {
                return Err(extra.error("expected one value per line"));
            }
            tokens[0].rational()
        })
        .collect()
}

pub fn format_norm_values(values: &[Rat]) -> String {
    values.iter().map(|v| format_rat(v) + "\n").collect()
}

/// `rows cols` then `rows * cols` entries in row-major order.
pub fn parse_matrix(input: &str) -> Result<RatMatrix, ParseError> {
    let lines = lines(input);
    let mut it = lines.iter();
    let (_, header) = it.next().ok_or_else(|| eof(input, "missing `rows cols` line"))?;
    if header.len() != 2 {
        return Err(header[0].error("expected `rows cols`"));
    }
    let rows = header[0].count()?;
    let cols = header[1].count()?;
    if rows == 0 || cols == 0 {
        return Err(header[0].error("matrix dimensions must be positive"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for t in it.flat_map(|(_, ts)| ts.iter()) {
        if entries.len() == rows * cols {
            return Err(t.error(format!("more than {} entries", rows * cols)));
        }
        entries.push(t.rational()?);
    }
    if entries.len() != rows * cols {
        return Err(eof(input, format!("expected {} entries, found {}", rows * cols, entries.len())));
    }
    Ok(RatMatrix::new(rows, cols, entries).expect("entry count checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    #[test]
    fn cayley_roundtrip() {
        for (_, s) in catalog::suite() {
            let parsed = parse_cayley(&format_cayley(&s)).unwrap().into_semigroup().unwrap();
            assert_eq!(parsed, s);
        }
        let s = catalog::multiplicative_zero_one();
        let parsed = parse_cayley(&format_cayley(&s)).unwrap().into_semigroup().unwrap();
        assert_eq!(parsed.labels(), Some(&[int(0), int(1)][..]));
    }

    #[test]
    fn labels_on_following_lines() {
        let f = parse_cayley("2\n0 0\n0 1\nlabels:\n0\n1/2\n").unwrap();
        assert_eq!(f.labels, Some(vec![int(0), rat(1, 2)]));
        let f = parse_cayley("2\n0 0\n0 1\nlabels:0 0.5\n").unwrap();
        assert_eq!(f.labels, Some(vec![int(0), rat(1, 2)]));
    }

    #[test]
    fn cayley_errors_have_positions() {
        let e = parse_cayley("2\n0 x\n1 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_cayley("2\n0 1\n").unwrap_err();
        assert!(e.message.contains("expected 2 table rows"));
        let e = parse_cayley("2\n0 1\n1 0\nfoo\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 1));
        let e = parse_cayley("2\n0 1\n1 0\nlabels: 1\n").unwrap_err();
        assert!(e.message.contains("expected 2 labels"));
        let e = parse_cayley("0\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn ragged_rows_reach_validation() {
        let f = parse_cayley("2\n0 1\n1\n").unwrap();
        assert!(matches!(
            f.into_semigroup(),
            Err(crate::semigroup::SemigroupError::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn comments_are_skipped() {
        let f = parse_cayley("# z2\n2\n\n0 1\n1 0 # not a comment token\n");
        assert!(f.is_err());
        let f = parse_cayley("# z2\n2\n\n0 1\n1 0\n").unwrap();
        assert_eq!(f.table, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn norm_values() {
        assert_eq!(parse_norm_values("1\n1/2\n0.25\n").unwrap(), vec![int(1), rat(1, 2), rat(1, 4)]);
        let e = parse_norm_values("1\n1 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(parse_norm_values(&format_norm_values(&[rat(3, 2), int(0)])).unwrap(), vec![rat(3, 2), int(0)]);
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("2 2\n1 2\n3 4\n").unwrap();
        assert_eq!(m, RatMatrix::from_ints(&[&[1, 2], &[3, 4]]));
        let m = parse_matrix("1 3\n1/2 -3 0.5").unwrap();
        assert_eq!(m.entries(), &[rat(1, 2), int(-3), rat(1, 2)]);
        assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
        assert!(parse_matrix("2 2\n1 2 3\n").is_err());
        let e = parse_matrix("2 2\n1 2\n3 4 5\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = parse_matrix("2 2\n1 q\n3 4\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }
}
