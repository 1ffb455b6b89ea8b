//! Labeled two-axis tables of total cost.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// TCO values over a row axis and a column axis, with the argmin of every row.
///
/// `cells[i][j]` is the value at `(rows[i], columns[j])`. Row argmins break
/// ties toward the smallest column index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepGrid {
    pub row_label: String,
    pub rows: Vec<f64>,
    pub column_label: String,
    pub columns: Vec<f64>,
    pub cells: Vec<Vec<f64>>,
    pub row_argmin: Vec<usize>,
}

impl SweepGrid {
    /// Evaluates `f(row, column)` at every cell.
    ///
    /// Rows are evaluated in parallel but assembled positionally, so the
    /// result does not depend on scheduling.
    pub fn evaluate<F>(
        row_label: &str,
        rows: Vec<f64>,
        column_label: &str,
        columns: Vec<f64>,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(f64, f64) -> Result<f64> + Sync,
    {
        if rows.is_empty() {
            return Err(Error::domain("rows", format!("empty {row_label} axis")));
        }
        if columns.is_empty() {
            return Err(Error::domain(
                "columns",
                format!("empty {column_label} axis"),
            ));
        }
        let cells = rows
            .par_iter()
            .map(|&r| columns.iter().map(|&c| f(r, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let row_argmin = cells.iter().map(|row| argmin(row)).collect();
        Ok(SweepGrid {
            row_label: row_label.to_string(),
            rows,
            column_label: column_label.to_string(),
            columns,
            cells,
            row_argmin,
        })
    }

    pub fn value(&self, row: usize, column: usize) -> f64 {
        self.cells[row][column]
    }

    /// Column value minimizing row `row`.
    pub fn row_minimizer(&self, row: usize) -> f64 {
        self.columns[self.row_argmin[row]]
    }

    /// Checks the shape and argmin invariants.
    pub fn is_consistent(&self) -> bool {
        self.cells.len() == self.rows.len()
            && self.row_argmin.len() == self.rows.len()
            && self.cells.iter().all(|r| r.len() == self.columns.len())
            && self
                .cells
                .iter()
                .zip(&self.row_argmin)
                .all(|(row, &i)| argmin(row) == i)
    }
}

/// First index of the minimum.
pub(crate) fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v < values[best] {
            best = i;
        }
    }
    best
}
