//! Staircase bands: subsets of an [`ImplicitSumMatrix`] stored as one index
//! interval per header row and header column.
//!
//! A band over `pr` header rows and `pc` header columns keeps
//!
//! * `rows[i]`, a half-open column range of row `i` (`i < pr`), and
//! * `cols[j]`, a half-open row range of column `j` (`j < pc`) that never
//!   starts above row `pr`.
//!
//! The second rule keeps the two families disjoint, so the cardinality is
//! the plain sum of interval lengths. Because every row and column of the
//! matrix is non-increasing, the cells of an interval are sorted and every
//! value-threshold query is one binary search per interval.

use std::ops::{Bound, Range, RangeBounds};

use crate::{Error, ImplicitSumMatrix, Result, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Line {
    Row(usize),
    Col(usize),
}

#[derive(Debug, Clone)]
pub struct StaircaseBand<'m> {
    matrix: &'m ImplicitSumMatrix<'m>,
    rows: Vec<Range<usize>>,
    cols: Vec<Range<usize>>,
}

impl<'m> StaircaseBand<'m> {
    /// Builds a band from explicit intervals, validating the layout rules.
    pub fn new(
        matrix: &'m ImplicitSumMatrix<'m>,
        rows: Vec<Range<usize>>,
        cols: Vec<Range<usize>>,
    ) -> Result<Self> {
        let (nr, nc) = (matrix.rows(), matrix.cols());
        let bad = |row, col| Error::IndexOutOfRange {
            row,
            col,
            rows: nr,
            cols: nc,
        };
        if rows.len() > nr || cols.len() > nc {
            return Err(bad(rows.len(), cols.len()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.start > r.end || r.end > nc {
                return Err(bad(i, r.end));
            }
        }
        for (j, c) in cols.iter().enumerate() {
            if c.start > c.end || c.end > nr || (c.start < rows.len() && c.start != c.end) {
                return Err(bad(c.start, j));
            }
        }
        Ok(Self { matrix, rows, cols })
    }

    /// Every cell lying in one of the first `p` rows or first `p` columns
    /// (each clamped to the matrix dimension).
    pub fn header(matrix: &'m ImplicitSumMatrix<'m>, p: usize) -> Self {
        let pr = p.min(matrix.rows());
        let pc = p.min(matrix.cols());
        Self {
            matrix,
            rows: vec![0..matrix.cols(); pr],
            cols: vec![pr..matrix.rows(); pc],
        }
    }

    /// A band of the same shape with no cells.
    pub fn empty_like(&self) -> Self {
        let pr = self.rows.len();
        Self {
            matrix: self.matrix,
            rows: vec![0..0; pr],
            cols: vec![pr..pr; self.cols.len()],
        }
    }

    pub fn matrix(&self) -> &'m ImplicitSumMatrix<'m> {
        self.matrix
    }

    /// Column ranges of the header rows.
    pub fn row_intervals(&self) -> &[Range<usize>] {
        &self.rows
    }

    /// Row ranges of the header columns.
    pub fn col_intervals(&self) -> &[Range<usize>] {
        &self.cols
    }

    pub fn cardinality(&self) -> usize {
        self.intervals().map(|(_, r)| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals().all(|(_, r)| r.is_empty())
    }

    /// Number of cells with value `>= x`.
    pub fn count_ge(&self, x: Value) -> usize {
        self.intervals()
            .map(|(line, r)| self.prefix_len(line, r, |v| v >= x))
            .sum()
    }

    /// Number of cells with value `> x`.
    pub fn count_gt(&self, x: Value) -> usize {
        self.intervals()
            .map(|(line, r)| self.prefix_len(line, r, |v| v > x))
            .sum()
    }

    /// All cell values, rows first, in interval order.
    pub fn enumerate(&self) -> Vec<Value> {
        let mut out = Vec::with_capacity(self.cardinality());
        for (line, r) in self.intervals() {
            out.extend(r.clone().map(|idx| self.value(line, idx)));
        }
        out
    }

    /// `(row, col)` of every cell, in the same order as [`enumerate`](Self::enumerate).
    /// Does not evaluate cells.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.intervals().flat_map(|(line, r)| {
            r.clone().map(move |idx| match line {
                Line::Row(i) => (i, idx),
                Line::Col(j) => (idx, j),
            })
        })
    }

    /// Cells whose value lies in `range`. Each interval shrinks by at most
    /// two binary searches.
    pub fn restrict<R: RangeBounds<Value>>(&self, range: R) -> Self {
        let hi = range.end_bound().cloned();
        let lo = range.start_bound().cloned();
        let shrink = |line: Line, r: &Range<usize>| -> Range<usize> {
            let drop = match hi {
                Bound::Unbounded => 0,
                Bound::Included(h) => self.prefix_len(line, r, |v| v > h),
                Bound::Excluded(h) => self.prefix_len(line, r, |v| v >= h),
            };
            let start = r.start + drop;
            let rest = start..r.end;
            let keep = match lo {
                Bound::Unbounded => rest.len(),
                Bound::Included(l) => self.prefix_len(line, &rest, |v| v >= l),
                Bound::Excluded(l) => self.prefix_len(line, &rest, |v| v > l),
            };
            start..start + keep
        };
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| shrink(Line::Row(i), r))
            .collect();
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, r)| shrink(Line::Col(j), r))
            .collect();
        Self {
            matrix: self.matrix,
            rows,
            cols,
        }
    }

    /// The middle cell `(lo + hi - 1) / 2` of every non-empty interval.
    pub fn interval_medians(&self) -> Vec<Value> {
        self.intervals()
            .filter(|(_, r)| !r.is_empty())
            .map(|(line, r)| self.value(line, r.start + (r.len() - 1) / 2))
            .collect()
    }

    /// Smallest value in the band, from the last cell of each interval.
    pub fn min_value(&self) -> Option<Value> {
        self.intervals()
            .filter(|(_, r)| !r.is_empty())
            .map(|(line, r)| self.value(line, r.end - 1))
            .min()
    }

    /// Largest value in the band, from the first cell of each interval.
    pub fn max_value(&self) -> Option<Value> {
        self.intervals()
            .filter(|(_, r)| !r.is_empty())
            .map(|(line, r)| self.value(line, r.start))
            .max()
    }

    /// Cells greater than `threshold` plus the first `ties` cells equal to
    /// it, in band order (rows first).
    pub fn above_with_ties(&self, threshold: Value, ties: usize) -> Result<Self> {
        let mut out = self.restrict((Bound::Excluded(threshold), Bound::Unbounded));
        let mut left = ties;
        let lines = (0..self.rows.len())
            .map(Line::Row)
            .chain((0..self.cols.len()).map(Line::Col));
        for line in lines {
            if left == 0 {
                break;
            }
            let (src, dst) = match line {
                Line::Row(i) => (&self.rows[i], &mut out.rows[i]),
                Line::Col(j) => (&self.cols[j], &mut out.cols[j]),
            };
            let tail = dst.end..src.end;
            let equal = self.prefix_len(line, &tail, |v| v >= threshold);
            let take = equal.min(left);
            dst.end += take;
            left -= take;
        }
        if left > 0 {
            return Err(Error::NotEnoughCells {
                requested: ties,
                available: ties - left,
            });
        }
        Ok(out)
    }

    /// Joins two bands of the same shape whose intervals abut end to start.
    pub fn union_adjacent(&self, other: &Self) -> Result<Self> {
        if !std::ptr::eq(self.matrix, other.matrix)
            || self.rows.len() != other.rows.len()
            || self.cols.len() != other.cols.len()
        {
            return Err(Error::NotAdjacent);
        }
        let join = |a: &Range<usize>, b: &Range<usize>| -> Result<Range<usize>> {
            if a.is_empty() {
                Ok(b.clone())
            } else if b.is_empty() {
                Ok(a.clone())
            } else if a.end == b.start {
                Ok(a.start..b.end)
            } else if b.end == a.start {
                Ok(b.start..a.end)
            } else {
                Err(Error::NotAdjacent)
            }
        };
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| join(a, b))
            .collect::<Result<_>>()?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| join(a, b))
            .collect::<Result<_>>()?;
        Ok(Self {
            matrix: self.matrix,
            rows,
            cols,
        })
    }

    fn intervals(&self) -> impl Iterator<Item = (Line, &Range<usize>)> {
        let rows = self.rows.iter().enumerate().map(|(i, r)| (Line::Row(i), r));
        let cols = self.cols.iter().enumerate().map(|(j, r)| (Line::Col(j), r));
        rows.chain(cols)
    }

    #[inline]
    fn value(&self, line: Line, idx: usize) -> Value {
        match line {
            Line::Row(i) => self.matrix.cell(i, idx),
            Line::Col(j) => self.matrix.cell(idx, j),
        }
    }

    /// Length of the leading run of `range` whose cells satisfy `pred`.
    /// `pred` must be monotone along the line (true, then false).
    fn prefix_len(&self, line: Line, range: &Range<usize>, pred: impl Fn(Value) -> bool) -> usize {
        let (mut lo, mut hi) = (range.start, range.end);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if pred(self.value(line, mid)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo - range.start
    }
}
