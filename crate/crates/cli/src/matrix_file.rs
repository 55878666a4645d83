//! Plain-text matrix format: a line holding `n`, then `n` lines of `n`
//! whitespace-separated integers. Entries are read mod 3, so `{0, 1, 2}` and
//! `{-1, 0, 1}` both work. Blank lines after the last row are ignored.

use anyhow::{bail, Context, Result};
use tritperm::MatrixF3;

pub fn parse(text: &str) -> Result<MatrixF3> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().context("line 1: empty file, expected the dimension n")?;
    let n: usize = header
        .trim()
        .parse()
        .with_context(|| format!("line 1: expected the dimension n, found {:?}", header.trim()))?;
    if n == 0 {
        bail!("line 1: dimension must be at least 1");
    }

    let mut rows = Vec::with_capacity(n);
    for (idx, line) in lines {
        let lineno = idx + 1;
        if rows.len() == n {
            if line.trim().is_empty() {
                continue;
            }
            bail!("line {lineno}: unexpected data after {n} rows");
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .with_context(|| format!("line {lineno}: {tok:?} is not an integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            bail!("line {lineno}: expected {n} entries, found {}", row.len());
        }
        rows.push(row);
    }
    if rows.len() != n {
        bail!("expected {n} rows, found {}", rows.len());
    }
    Ok(MatrixF3::from_rows(&rows)?)
}

/// Writes entries in centered form, or as `{0, 1, 2}` with `classes`.
pub fn format(m: &MatrixF3, classes: bool) -> String {
    let mut out = format!("{}\n", m.n());
    for i in 0..m.n() {
        let row: Vec<String> = m.row(i).iter().map(|&v| show_trit(v, classes)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn show_trit(v: i8, classes: bool) -> String {
    if classes {
        v.rem_euclid(3).to_string()
    } else {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_conventions() {
        let a = parse("2\n0 1\n2 -1\n").unwrap();
        assert_eq!(a.entries(), &[0, 1, -1, -1]);
        let b = parse("1\n  5  \n\n\n").unwrap();
        assert_eq!(b.entries(), &[-1]);
    }

    #[test]
    fn reports_errors_with_line_numbers() {
        let msg = |t: &str| format!("{:#}", parse(t).unwrap_err());
        assert!(msg("").contains("line 1"));
        assert!(msg("x\n").contains("line 1"));
        assert!(msg("0\n").contains("at least 1"));
        assert!(msg("2\n1 0\n1\n").contains("line 3: expected 2 entries, found 1"));
        assert!(msg("2\n1 0\n1 a\n").contains("line 3: \"a\" is not an integer"));
        assert!(msg("2\n1 0\n").contains("expected 2 rows, found 1"));
        assert!(msg("1\n1\n1\n").contains("line 3: unexpected data"));
    }

    #[test]
    fn format_round_trips() {
        let a = MatrixF3::from_rows(&[[1, 0, -1], [2, 2, 0], [0, 1, 1]]).unwrap();
        assert_eq!(parse(&format(&a, false)).unwrap(), a);
        assert_eq!(parse(&format(&a, true)).unwrap(), a);
        assert_eq!(format(&a, true), "3\n1 0 2\n2 2 0\n0 1 1\n");
    }
}
