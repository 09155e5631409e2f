//! Selection of the `k` largest sums of `X + Y` for sorted `X`, `Y`.
//!
//! The `k` largest cells of the sum matrix always fit in its first
//! `⌈√k⌉` rows and columns, so the search is confined to that header band.
//! A binary search along the diagonal brackets the answer between two
//! staircases; prune-and-search over interval medians then finds the exact
//! threshold. Only `O(√k log³ k)` cells are evaluated and the result stays
//! implicit until [`xy_top_k_values`] enumerates it.

use std::ops::Bound;

use crate::{ceil_sqrt, Error, ImplicitSumMatrix, Result, StaircaseBand, Value};

/// Cells of the header band (first `p` rows and columns) with value at
/// least `M[row][col]`, and their count.
pub fn staircase<'m>(
    matrix: &'m ImplicitSumMatrix<'m>,
    row: usize,
    col: usize,
    p: usize,
) -> Result<(StaircaseBand<'m>, usize)> {
    let x = matrix.get(row, col)?;
    if p == 0 {
        return Err(Error::KOutOfRange {
            k: p,
            max: matrix.rows().min(matrix.cols()),
        });
    }
    let band = StaircaseBand::header(matrix, p).restrict(x..);
    let count = band.cardinality();
    Ok((band, count))
}

/// Result of the diagonal binary search.
#[derive(Debug, Clone)]
pub struct DiagonalSplit<'m> {
    /// Largest diagonal index whose staircase holds at most `k` cells.
    pub index: Option<usize>,
    /// Staircase at `index` (empty when `index` is `None`).
    pub lower: StaircaseBand<'m>,
    /// Staircase at `index + 1`, or the whole header band past the last
    /// diagonal cell. Holds at least `k` cells.
    pub upper: StaircaseBand<'m>,
}

fn check_k(matrix: &ImplicitSumMatrix, k: usize) -> Result<()> {
    if k == 0 || k > matrix.len() {
        return Err(Error::KOutOfRange {
            k,
            max: matrix.len(),
        });
    }
    Ok(())
}

/// Brackets rank `k` between two consecutive diagonal staircases.
pub fn diagonal_split<'m>(
    matrix: &'m ImplicitSumMatrix<'m>,
    k: usize,
) -> Result<DiagonalSplit<'m>> {
    check_k(matrix, k)?;
    let p = ceil_sqrt(k);
    let header = StaircaseBand::header(matrix, p);
    let diag = p.min(matrix.rows()).min(matrix.cols());

    // First diagonal index whose staircase exceeds k cells.
    let (mut lo, mut hi) = (0, diag);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if header.count_ge(matrix.cell(mid, mid)) <= k {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let index = lo.checked_sub(1);
    let lower = match index {
        Some(i) => header.restrict(matrix.cell(i, i)..),
        None => header.empty_like(),
    };
    let upper = if lo < diag {
        header.restrict(matrix.cell(lo, lo)..)
    } else {
        header
    };
    Ok(DiagonalSplit {
        index,
        lower,
        upper,
    })
}

/// Implicit band of exactly `k` cells holding the `k` largest sums.
pub fn xy_top_k_band<'m>(matrix: &'m ImplicitSumMatrix<'m>, k: usize) -> Result<StaircaseBand<'m>> {
    let split = diagonal_split(matrix, k)?;
    let taken = split.lower.cardinality();
    if taken == k {
        return Ok(split.lower);
    }
    if split.upper.cardinality() == k {
        return Ok(split.upper);
    }
    let between = match split.index {
        Some(i) => split.upper.restrict(..matrix.cell(i, i)),
        None => split.upper,
    };
    let rest = find_index(&between, k - taken)?;
    split.lower.union_adjacent(&rest)
}

/// Sub-band of exactly `remaining` cells, each at least as large as every
/// cell of `band` left out. Ties at the threshold are taken in band order.
pub fn find_index<'m>(band: &StaircaseBand<'m>, remaining: usize) -> Result<StaircaseBand<'m>> {
    let available = band.cardinality();
    if remaining == 0 || remaining > available {
        return Err(Error::NotEnoughCells {
            requested: remaining,
            available,
        });
    }
    if remaining == available {
        return Ok(band.clone());
    }
    let (threshold, ties) = threshold(band, remaining)?;
    band.above_with_ties(threshold, ties)
}

/// Prune-and-search for the value of rank `remaining` in `band`.
///
/// Returns `(t, ties)` such that the cells `> t` plus `ties` cells `== t`
/// are exactly `remaining` cells.
fn threshold(band: &StaircaseBand<'_>, remaining: usize) -> Result<(Value, usize)> {
    let limit = 4 * (usize::BITS - band.cardinality().leading_zeros()) as usize + 8;
    let mut window = band.clone();
    let mut left = remaining;
    for _ in 0..limit {
        let mut probes = window.interval_medians();
        probes.sort_unstable_by(|a, b| b.cmp(a));
        probes.dedup();

        // alpha(x) = count_ge(x) grows along `probes`; find the first probe
        // holding more than `left` cells.
        let (mut lo, mut hi) = (0, probes.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if window.count_ge(probes[mid]) <= left {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let upper = lo.checked_sub(1).map(|i| probes[i]);
        let lower = probes.get(lo).copied();

        // Cells at or above `upper` are all kept; cells at or below `lower`
        // are kept only if the ones above `lower` do not already suffice.
        let alpha = upper.map(|x| window.count_ge(x));
        if let (Some(x), Some(a)) = (upper, alpha) {
            if a == left {
                return Ok((x, a - window.count_gt(x)));
            }
        }
        if let Some(x) = lower {
            let beta = window.count_gt(x);
            if beta <= left {
                return Ok((x, left - beta));
            }
        }
        let above = match upper {
            Some(x) => Bound::Excluded(x),
            None => Bound::Unbounded,
        };
        let below = match lower {
            Some(x) => Bound::Excluded(x),
            None => Bound::Unbounded,
        };
        window = window.restrict((below, above));
        left -= alpha.unwrap_or(0);
    }
    Err(Error::RecursionLimit(limit))
}

/// The `k` largest sums, unordered.
pub fn xy_top_k_values(matrix: &ImplicitSumMatrix<'_>, k: usize) -> Result<Vec<Value>> {
    Ok(xy_top_k_band(matrix, k)?.enumerate())
}

/// The `k`-th largest sum, read off the band's interval endpoints.
pub fn xy_kth_largest(matrix: &ImplicitSumMatrix<'_>, k: usize) -> Result<Value> {
    let band = xy_top_k_band(matrix, k)?;
    band.min_value().ok_or(Error::KOutOfRange {
        k,
        max: matrix.len(),
    })
}
