//! The implicit sorted matrix `M[i][j] = a[i] + b[j]`.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::toplist::is_non_increasing;
use crate::{Error, Result, Value};

/// Sum matrix of two non-increasing arrays, evaluated on demand.
///
/// Rows are indexed by `a`, columns by `b`; every row and column is
/// non-increasing. Cell reads go through [`ImplicitSumMatrix::cell`], which
/// bumps an evaluation counter used to measure how much of the matrix an
/// algorithm actually looks at.
#[derive(Debug)]
pub struct ImplicitSumMatrix<'a> {
    a: &'a [Value],
    b: &'a [Value],
    evals: AtomicU64,
}

impl<'a> ImplicitSumMatrix<'a> {
    /// Builds the matrix, checking that both arrays are non-empty, sorted
    /// non-increasing, and that every cell fits in a [`Value`].
    pub fn new(a: &'a [Value], b: &'a [Value]) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !is_non_increasing(a) || !is_non_increasing(b) {
            return Err(Error::NotSorted);
        }
        // The extreme cells bound all others.
        a[0].checked_add(b[0]).ok_or(Error::Overflow)?;
        a[a.len() - 1]
            .checked_add(b[b.len() - 1])
            .ok_or(Error::Overflow)?;
        Ok(Self {
            a,
            b,
            evals: AtomicU64::new(0),
        })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.b.len()
    }

    /// Number of cells, `rows * cols`.
    pub fn len(&self) -> usize {
        self.a.len() * self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn row_values(&self) -> &'a [Value] {
        self.a
    }

    pub fn col_values(&self) -> &'a [Value] {
        self.b
    }

    /// Value at `(row, col)`; counted as one evaluation.
    #[inline]
    pub fn cell(&self, row: usize, col: usize) -> Value {
        self.evals.fetch_add(1, Ordering::Relaxed);
        self.a[row] + self.b[col]
    }

    /// Like [`cell`](Self::cell) but bounds-checked.
    pub fn get(&self, row: usize, col: usize) -> Result<Value> {
        if row >= self.rows() || col >= self.cols() {
            return Err(Error::IndexOutOfRange {
                row,
                col,
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(self.cell(row, col))
    }

    /// Cell evaluations since construction or the last reset.
    pub fn evaluations(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    pub fn reset_evaluations(&self) {
        self.evals.store(0, Ordering::Relaxed);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_and_counter() {
        let a = [9, 7, 5, 3];
        let b = [8, 6, 4, 2];
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        assert_eq!(m.cell(0, 0), 17);
        assert_eq!(m.cell(3, 3), 5);
        assert_eq!(m.get(1, 2).unwrap(), 11);
        assert_eq!(m.evaluations(), 3);
        assert!(matches!(m.get(4, 0), Err(Error::IndexOutOfRange { .. })));
        m.reset_evaluations();
        assert_eq!(m.evaluations(), 0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            ImplicitSumMatrix::new(&[1, 2], &[0]).unwrap_err(),
            Error::NotSorted
        );
        assert_eq!(
            ImplicitSumMatrix::new(&[], &[0]).unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(
            ImplicitSumMatrix::new(&[i64::MAX], &[1]).unwrap_err(),
            Error::Overflow
        );
        assert_eq!(
            ImplicitSumMatrix::new(&[0, i64::MIN], &[0, -1]).unwrap_err(),
            Error::Overflow
        );
    }
}
