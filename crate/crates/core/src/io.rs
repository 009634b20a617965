//! Plain-text table and permutation files.
//!
//! A table file holds the order `n` on its first non-comment line followed
//! by `n` rows of `n` whitespace-separated decimal indices. `#` starts a
//! comment that runs to the end of the line; blank lines are ignored.
//! A permutation file holds a single line of decimal indices.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct TableError {
    pub line: usize,
    pub message: String,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_indices(line: usize, s: &str) -> Result<Vec<usize>, TableError> {
    s.split_ascii_whitespace()
        .map(|tok| {
            if !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(TableError {
                    line,
                    message: format!("expected a decimal index, found {tok:?}"),
                });
            }
            tok.parse::<usize>().map_err(|e| TableError {
                line,
                message: format!("bad index {tok:?}: {e}"),
            })
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<Vec<Vec<usize>>, TableError> {
    let mut lines = content_lines(text);
    let (first_line, header) = lines.next().ok_or(TableError {
        line: 0,
        message: "missing order line".into(),
    })?;
    let header = parse_indices(first_line, header)?;
    let [n] = header[..] else {
        return Err(TableError {
            line: first_line,
            message: "order line must hold exactly one number".into(),
        });
    };
    let mut rows = Vec::with_capacity(n);
    let mut last = first_line;
    for (line, content) in lines {
        if rows.len() == n {
            return Err(TableError {
                line,
                message: format!("unexpected content after {n} rows"),
            });
        }
        let row = parse_indices(line, content)?;
        if row.len() != n {
            return Err(TableError {
                line,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        rows.push(row);
        last = line;
    }
    if rows.len() != n {
        return Err(TableError {
            line: last,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

pub fn format_table(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        out.push_str(&format_permutation(row));
    }
    out
}

pub fn parse_permutation(text: &str) -> Result<Vec<usize>, TableError> {
    let mut lines = content_lines(text);
    let (line, content) = lines.next().ok_or(TableError {
        line: 0,
        message: "empty permutation file".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(TableError {
            line: extra,
            message: "permutation file must hold a single line".into(),
        });
    }
    parse_indices(line, content)
}

/// One LF-terminated line of space-separated indices.
pub fn format_permutation(p: &[usize]) -> String {
    let mut s = p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# Z/3\n3\n0 1 2  # row 0\n1 2 0\n\n2 0 1\n";
        assert_eq!(
            parse_table(text).unwrap(),
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(parse_table("").unwrap_err().line, 0);
        assert_eq!(parse_table("2\n0 1\n1\n").unwrap_err().line, 3);
        assert!(parse_table("2\n0 1\n").is_err());
        assert!(parse_table("1\n0\n0\n").is_err());
        assert!(parse_table("1 2\n0\n").is_err());
        assert!(parse_table("1\n-1\n").is_err());
    }

    #[test]
    fn permutation_lines() {
        assert_eq!(
            parse_permutation("# rho\n2 3 0 1\n").unwrap(),
            vec![2, 3, 0, 1]
        );
        assert!(parse_permutation("0 1\n1 0\n").is_err());
        assert_eq!(format_permutation(&[2, 3, 0, 1]), "2 3 0 1\n");
    }

    proptest! {
        #[test]
        fn table_round_trip(n in 1usize..6, seed in proptest::collection::vec(0usize..100, 36)) {
            let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| seed[i * 6 + j]).collect()).collect();
            prop_assert_eq!(parse_table(&format_table(&rows)).unwrap(), rows);
        }

        #[test]
        fn parser_is_total(text in ".{0,200}") {
            let _ = parse_table(&text);
            let _ = parse_permutation(&text);
        }
    }
}
