use crate::error::{Error, Result};

/// A binary matrix stored as sorted support lists in both orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    col_rows: Vec<Vec<usize>>,
    row_cols: Vec<Vec<usize>>,
}

impl SparseMatrix {
    /// Builds a matrix from per-column row supports. Entries are sorted;
    /// duplicates and out-of-range rows are rejected.
    pub fn from_columns(rows: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        let cols = columns.len();
        let mut col_rows = columns;
        let mut row_cols = vec![Vec::new(); rows];
        for (j, support) in col_rows.iter_mut().enumerate() {
            support.sort_unstable();
            for w in support.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidMatrix(format!(
                        "column {j} lists row {} twice",
                        w[0]
                    )));
                }
            }
            for &i in support.iter() {
                if i >= rows {
                    return Err(Error::InvalidMatrix(format!(
                        "column {j} references row {i} but there are only {rows} rows"
                    )));
                }
                row_cols[i].push(j);
            }
        }
        Ok(SparseMatrix {
            rows,
            cols,
            col_rows,
            row_cols,
        })
    }

    /// Builds a matrix from a dense 0/1 grid given row by row.
    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::new(); cols];
        for (i, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[j].push(i);
                }
            }
        }
        Self::from_columns(rows, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.col_rows[j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.row_cols[i]
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.col_rows
    }

    pub fn row_lists(&self) -> &[Vec<usize>] {
        &self.row_cols
    }

    pub fn nnz(&self) -> usize {
        self.col_rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.col_rows[j].binary_search(&i).is_ok()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut dense = vec![vec![0u8; self.cols]; self.rows];
        for (j, support) in self.col_rows.iter().enumerate() {
            for &i in support {
                dense[i][j] = 1;
            }
        }
        dense
    }
}
