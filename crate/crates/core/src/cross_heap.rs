//! Combine-phase primitives: bounded merge, scalar shift, linear-time
//! selection, and the priority-queue frontier for the `k` largest pairwise
//! sums of two sorted lists.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use crate::{Error, OpCount, Result, TopList, Value};

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, max: usize::MAX });
    }
    Ok(())
}

/// The `k` largest values of the concatenation of `lists`, merged pairwise.
pub fn merge_top_k(lists: &[TopList], k: usize) -> Result<TopList> {
    check_k(k)?;
    let mut ops = OpCount::default();
    let mut acc: Vec<Value> = Vec::new();
    for list in lists {
        acc = merge_sorted(&acc, list.as_slice(), k, &mut ops);
    }
    Ok(TopList::from_sorted_unchecked(acc, k))
}

/// Adds `a` to every entry of `list`.
pub fn add_scalar_top_k(a: Value, list: &TopList) -> Result<TopList> {
    let shifted = add_scalar(a, list.as_slice())?;
    Ok(TopList::from_sorted_unchecked(shifted, list.capacity()))
}

/// The `k` largest of `values` as a sorted list.
///
/// The selection itself is linear; only the `k` survivors are sorted.
pub fn select_top_k(values: &[Value], k: usize) -> Result<TopList> {
    check_k(k)?;
    let mut ops = OpCount::default();
    let mut top = select_unordered(values.to_vec(), k, &mut ops);
    top.sort_unstable_by(|a, b| b.cmp(a));
    Ok(TopList::from_sorted_unchecked(top, k))
}

/// The `k` largest sums `a[i] + b[j]`, in non-increasing order.
///
/// Walks the sorted sum matrix from `(0, 0)` with a max-heap frontier; a
/// hash set of visited index pairs keeps each cell from being queued twice.
/// Returns every sum when `|a| * |b| < k`.
pub fn max_sum_cross_heap(a: &TopList, b: &TopList, k: usize) -> Result<TopList> {
    check_k(k)?;
    let mut ops = OpCount::default();
    let out = cross_heap(a.as_slice(), b.as_slice(), k, &mut ops)?;
    Ok(TopList::from_sorted_unchecked(out, k))
}

/// Two-way merge of non-increasing slices, stopping after `k` values.
pub(crate) fn merge_sorted(a: &[Value], b: &[Value], k: usize, ops: &mut OpCount) -> Vec<Value> {
    let want = k.min(a.len() + b.len());
    let mut out = Vec::with_capacity(want);
    let (mut i, mut j) = (0, 0);
    while out.len() < want {
        if i < a.len() && j < b.len() {
            ops.comparisons += 1;
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        } else if i < a.len() {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out
}

pub(crate) fn add_scalar(a: Value, list: &[Value]) -> Result<Vec<Value>> {
    list.iter()
        .map(|&v| v.checked_add(a).ok_or(Error::Overflow))
        .collect()
}

/// The `k` largest of `values` in no particular order, in linear time.
pub(crate) fn select_unordered(mut values: Vec<Value>, k: usize, ops: &mut OpCount) -> Vec<Value> {
    if k < values.len() {
        let comparisons = Cell::new(0u64);
        values.select_nth_unstable_by(k - 1, |x, y| {
            comparisons.set(comparisons.get() + 1);
            y.cmp(x)
        });
        values.truncate(k);
        ops.comparisons += comparisons.get();
    }
    values
}

struct Frontier<'c> {
    sum: Value,
    i: usize,
    j: usize,
    comparisons: &'c Cell<u64>,
}

impl PartialEq for Frontier<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.sum == other.sum
    }
}

impl Eq for Frontier<'_> {}

impl PartialOrd for Frontier<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frontier<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.comparisons.set(self.comparisons.get() + 1);
        self.sum.cmp(&other.sum)
    }
}

pub(crate) fn cross_heap(
    a: &[Value],
    b: &[Value],
    k: usize,
    ops: &mut OpCount,
) -> Result<Vec<Value>> {
    let want = k.min(a.len() * b.len());
    let mut out = Vec::with_capacity(want);
    if want == 0 {
        return Ok(out);
    }
    let comparisons = Cell::new(0u64);
    let entry = |i: usize, j: usize| -> Result<Frontier<'_>> {
        Ok(Frontier {
            sum: a[i].checked_add(b[j]).ok_or(Error::Overflow)?,
            i,
            j,
            comparisons: &comparisons,
        })
    };
    let mut queue = BinaryHeap::with_capacity(2 * want);
    let mut seen = HashSet::with_capacity(2 * want);
    queue.push(entry(0, 0)?);
    seen.insert((0usize, 0usize));
    while out.len() < want {
        let Some(top) = queue.pop() else { break };
        out.push(top.sum);
        let (i, j) = (top.i, top.j);
        if i + 1 < a.len() && seen.insert((i + 1, j)) {
            queue.push(entry(i + 1, j)?);
        }
        if j + 1 < b.len() && seen.insert((i, j + 1)) {
            queue.push(entry(i, j + 1)?);
        }
    }
    drop(queue);
    ops.comparisons += comparisons.get();
    Ok(out)
}
