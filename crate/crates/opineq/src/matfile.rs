//! Text format for matrices.
//!
//! A file is a header line `rows cols`, then `rows * cols` entries in
//! row-major order, each entry two whitespace-separated decimals `re im`.
//! Lines starting with `#` are comments; blank lines are ignored; tokens
//! may wrap across lines freely. Serialization writes 17 significant
//! digits, so parse(serialize(m)) reproduces m exactly for finite values.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut tokens = Vec::new(); // (line_number, token)
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        for tok in line.split_whitespace() {
            tokens.push((line_no, tok));
        }
    }
    let mut pos = 0usize;
    let mut next_number = |what: &str| -> Result<(usize, f64)> {
        let Some(&(line, tok)) = tokens.get(pos) else {
            let line = tokens.last().map(|&(l, _)| l).unwrap_or(1);
            return Err(Error::Parse {
                line,
                msg: format!("unexpected end of file while reading {what}"),
            });
        };
        pos += 1;
        let value: f64 = tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("invalid number '{tok}' while reading {what}"),
        })?;
        Ok((line, value))
    };

    let (line, rows_f) = next_number("the row count")?;
    if rows_f.fract() != 0.0 || rows_f < 1.0 || rows_f > 1e6 {
        return Err(Error::Parse {
            line,
            msg: format!("invalid row count {rows_f}"),
        });
    }
    let (line, cols_f) = next_number("the column count")?;
    if cols_f.fract() != 0.0 || cols_f < 1.0 || cols_f > 1e6 {
        return Err(Error::Parse {
            line,
            msg: format!("invalid column count {cols_f}"),
        });
    }
    let (rows, cols) = (rows_f as usize, cols_f as usize);

    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let what = format!("entry ({i},{j})");
            let (line_re, re) = next_number(&what)?;
            let (_, im) = next_number(&what)?;
            if !re.is_finite() || !im.is_finite() {
                return Err(Error::Parse {
                    line: line_re,
                    msg: format!("entry ({i},{j}) is not finite"),
                });
            }
            entries.push(Complex64::new(re, im));
        }
    }
    if pos < tokens.len() {
        let (line, tok) = tokens[pos];
        return Err(Error::Parse {
            line,
            msg: format!("unexpected trailing token '{tok}' after {rows}x{cols} entries"),
        });
    }
    Matrix::new(rows, cols, entries)
}

/// One line per matrix row; 17 significant digits round-trip every finite
/// double exactly.
pub fn serialize_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        let mut first = true;
        for j in 0..m.cols() {
            if !first {
                out.push(' ');
            }
            first = false;
            let z = m[(i, j)];
            out.push_str(&format!("{:.16e} {:.16e}", z.re, z.im));
        }
        out.push('\n');
    }
    out
}

pub fn read_matrix_file(path: &std::path::Path) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix(&text)
}

pub fn write_matrix_file(path: &std::path::Path, m: &Matrix) -> Result<()> {
    std::fs::write(path, serialize_matrix(m))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# demo operator\n2 2\n\n1 0 0 0\n1 0 1 0   # trailing comment\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m, Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]));
    }

    #[test]
    fn round_trips_exactly() {
        let m = Matrix::from_fn(2, 3, |i, j| {
            Complex64::new(
                (i as f64 + 0.1) * std::f64::consts::PI,
                -(j as f64) / 3.0 - 1e-17,
            )
        });
        let back = parse_matrix(&serialize_matrix(&m)).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_matrix("2 2\n1 0 0 0\n1 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "unexpected end of file while reading entry (1,1)".into()
            }
        );

        let err = parse_matrix("2 2\n1 0 0 0\n1 0 x 0\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("'x'"), "msg = {msg}");
            }
            other => panic!("unexpected {other:?}"),
        }

        let err = parse_matrix("1 1\n1 0\n7\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_headers_and_nonfinite() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("0 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("1.5 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_matrix("1 1\ninf 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
