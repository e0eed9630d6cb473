//! Plain-text matrix files.
//!
//! Format: a header line `rows cols`, then `rows` lines of `cols`
//! whitespace-separated finite floating-point values. Values are written
//! with the shortest representation that parses back to the identical
//! bits, so write-then-read round-trips exactly. NaN and infinities are
//! rejected on input: comparison-model code relies on a total order over
//! genuine keys, and the infinite sentinels are reserved for probes.

use std::io::{BufRead, Write};

use crate::matrix::MatrixData;

/// Parse failure, with 1-based line numbers for the offending input.
#[derive(Debug, thiserror::Error)]
pub enum MatrixFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected a header of two positive integers `rows cols`")]
    BadHeader { line: usize },
    #[error("line {line}: expected {expected} values in the row, found {found}")]
    BadRowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: `{token}` is not a finite number")]
    BadValue { line: usize, token: String },
    #[error("expected {expected} data rows, found only {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last data row")]
    TrailingContent { line: usize },
}

/// Read a dense matrix from the text format. Blank lines (and lines of
/// pure whitespace) are ignored wherever they appear.
pub fn read_matrix(reader: impl BufRead) -> Result<MatrixData, MatrixFileError> {
    let mut lines = reader
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line))
        .filter(|(_, line)| !matches!(line, Ok(l) if l.trim().is_empty()));

    let (header_line, header) = match lines.next() {
        Some((no, line)) => (no, line?),
        None => return Err(MatrixFileError::BadHeader { line: 1 }),
    };
    let mut dims = header.split_whitespace();
    let rows: usize = dims
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&v| v > 0)
        .ok_or(MatrixFileError::BadHeader { line: header_line })?;
    let cols: usize = dims
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&v| v > 0)
        .ok_or(MatrixFileError::BadHeader { line: header_line })?;
    if dims.next().is_some() {
        return Err(MatrixFileError::BadHeader { line: header_line });
    }

    let mut cells: Vec<f64> = Vec::with_capacity(rows.saturating_mul(cols));
    for wanted in 0..rows {
        let (line_no, line) = match lines.next() {
            Some((no, line)) => (no, line?),
            None => return Err(MatrixFileError::MissingRows { expected: rows, found: wanted }),
        };
        let mut found = 0usize;
        for token in line.split_whitespace() {
            let value: f64 = token
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| MatrixFileError::BadValue {
                    line: line_no,
                    token: token.to_string(),
                })?;
            found += 1;
            if found > cols {
                return Err(MatrixFileError::BadRowLength {
                    line: line_no,
                    expected: cols,
                    found,
                });
            }
            cells.push(value);
        }
        if found != cols {
            return Err(MatrixFileError::BadRowLength { line: line_no, expected: cols, found });
        }
    }
    if let Some((line_no, line)) = lines.next() {
        line?;
        return Err(MatrixFileError::TrailingContent { line: line_no });
    }
    Ok(MatrixData::from_rows_flat(rows, cols, cells))
}

/// Write a matrix in the text format. Works for lazy data too; each cell
/// is evaluated once.
pub fn write_matrix(mut writer: impl Write, data: &MatrixData) -> std::io::Result<()> {
    writeln!(writer, "{} {}", data.rows(), data.cols())?;
    let mut line = String::new();
    for i in 0..data.rows() {
        line.clear();
        for j in 0..data.cols() {
            if j > 0 {
                line.push(' ');
            }
            // `Display` for f64 emits the shortest string that parses back
            // to the same bits, which keeps round-trips exact.
            line.push_str(&format!("{}", data.at(i, j)));
        }
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

/// Render to a `String` (test and CLI convenience).
pub fn matrix_to_string(data: &MatrixData) -> String {
    let mut buf = Vec::new();
    write_matrix(&mut buf, data).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("matrix text is ASCII")
}
