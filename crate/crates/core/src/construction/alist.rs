//! MacKay alist text format.
//!
//! ```text
//! N M
//! max_col_weight max_row_weight
//! <N column weights>
//! <M row weights>
//! <N lines: 1-based rows of each column>
//! <M lines: 1-based columns of each row>
//! ```
//!
//! No zero padding is written; the reader tolerates none either.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{LiftedCode, SparseMatrix};

fn join(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_alist<W: Write>(matrix: &SparseMatrix, mut out: W) -> std::io::Result<()> {
    let col_w = matrix.columns().iter().map(Vec::len);
    let row_w = matrix.row_lists().iter().map(Vec::len);
    writeln!(out, "{} {}", matrix.cols(), matrix.rows())?;
    writeln!(
        out,
        "{} {}",
        col_w.clone().max().unwrap_or(0),
        row_w.clone().max().unwrap_or(0)
    )?;
    writeln!(out, "{}", join(col_w))?;
    writeln!(out, "{}", join(row_w))?;
    for col in matrix.columns() {
        writeln!(out, "{}", join(col.iter().map(|i| i + 1)))?;
    }
    for row in matrix.row_lists() {
        writeln!(out, "{}", join(row.iter().map(|j| j + 1)))?;
    }
    Ok(())
}

pub fn export_alist(code: &LiftedCode, destination: impl AsRef<Path>) -> Result<()> {
    let path = destination.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_alist(code.matrix(), &mut out).map_err(|e| Error::io(path, e))?;
    out.flush().map_err(|e| Error::io(path, e))
}

struct Lines<R> {
    inner: std::io::Lines<R>,
    number: usize,
}

impl<R: BufRead> Lines<R> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Alist {
            line: self.number,
            message: message.into(),
        }
    }

    fn next_numbers(&mut self, expected: Option<usize>) -> Result<Vec<usize>> {
        self.number += 1;
        let line = match self.inner.next() {
            Some(Ok(line)) => line,
            Some(Err(e)) => return Err(self.err(e.to_string())),
            None => return Err(self.err("unexpected end of file")),
        };
        let values = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| self.err(format!("not a non-negative integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(n) = expected {
            if values.len() != n {
                return Err(self.err(format!("expected {n} values, found {}", values.len())));
            }
        }
        Ok(values)
    }

    fn index_list(&mut self, weight: usize, bound: usize, what: &str) -> Result<Vec<usize>> {
        let values = self.next_numbers(Some(weight))?;
        values
            .into_iter()
            .map(|v| {
                if v == 0 || v > bound {
                    Err(self.err(format!("{what} index {v} outside 1..={bound}")))
                } else {
                    Ok(v - 1)
                }
            })
            .collect()
    }
}

pub fn read_alist<R: BufRead>(reader: R) -> Result<SparseMatrix> {
    let mut lines = Lines {
        inner: reader.lines(),
        number: 0,
    };
    let header = lines.next_numbers(Some(2))?;
    let (n, m) = (header[0], header[1]);
    let maxima = lines.next_numbers(Some(2))?;
    let col_w = lines.next_numbers(Some(n))?;
    let row_w = lines.next_numbers(Some(m))?;
    if col_w.iter().copied().max().unwrap_or(0) != maxima[0]
        || row_w.iter().copied().max().unwrap_or(0) != maxima[1]
    {
        return Err(Error::Alist {
            line: 2,
            message: "maximum weights disagree with the weight lists".into(),
        });
    }

    let mut columns = Vec::with_capacity(n);
    for &w in &col_w {
        columns.push(lines.index_list(w, m, "row")?);
    }
    let first_row_line = lines.number + 1;
    let mut rows = Vec::with_capacity(m);
    for &w in &row_w {
        rows.push(lines.index_list(w, n, "column")?);
    }

    let matrix = SparseMatrix::from_columns(m, columns).map_err(|e| Error::Alist {
        line: 5,
        message: e.to_string(),
    })?;
    for (i, mut listed) in rows.into_iter().enumerate() {
        listed.sort_unstable();
        if listed != matrix.row(i) {
            return Err(Error::Alist {
                line: first_row_line + i,
                message: format!("row {} disagrees with the column lists", i + 1),
            });
        }
    }
    Ok(matrix)
}

pub fn import_alist(source: impl AsRef<Path>) -> Result<SparseMatrix> {
    let path = source.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_alist(BufReader::new(file))
}
