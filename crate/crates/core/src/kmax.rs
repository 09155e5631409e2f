//! The k-maximum subarrays driver.
//!
//! Every recursion node returns a [`KMaxSummary`]: the `k` best prefix sums,
//! the `k` best suffix sums, the segment total, and the `k` best subarray
//! sums. Combining two children needs the `k` largest crossing sums
//! (suffix of the left child plus prefix of the right child); how those are
//! found is the job of a [`CrossSumStrategy`], picked by name from
//! [`registry`].

use std::cell::Cell;
use std::fmt;

use crate::cross_heap::{add_scalar, cross_heap, merge_sorted, select_unordered};
use crate::xy_select::xy_top_k_band;
use crate::{ceil_sqrt, validate_input, Error, ImplicitSumMatrix, OpCount, Result, TopList, Value};

/// Per-segment state passed up the recursion tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMaxSummary {
    /// Largest sums of subarrays starting at the segment's first index.
    pub max_left: TopList,
    /// Largest sums of subarrays ending at the segment's last index.
    pub max_right: TopList,
    pub sum: Value,
    /// Largest subarray sums of the segment. Sorted non-increasing when the
    /// strategy keeps lists sorted or after the final sort of [`max_k`];
    /// otherwise an unordered multiset.
    pub max_sub: Vec<Value>,
}

/// How the `k` largest crossing sums are found and folded into `max_sub`.
pub trait CrossSumStrategy: Send + Sync + fmt::Debug {
    /// Registry key.
    fn name(&self) -> &'static str;

    /// Whether `max_sub` lists produced under this strategy are sorted.
    fn sorted_sub(&self) -> bool;

    /// The `k` largest `suffixes[i] + prefixes[j]`; both inputs are sorted
    /// non-increasing.
    fn crossing_sums(
        &self,
        suffixes: &[Value],
        prefixes: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Result<Vec<Value>>;

    /// The `k` largest of `cross`, `left` and `right` together.
    fn best_of(
        &self,
        cross: Vec<Value>,
        left: &[Value],
        right: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Vec<Value>;
}

/// Heap frontier for crossing sums, sorted merges everywhere.
/// `O(k log k)` per combine.
#[derive(Debug, Clone, Copy, Default)]
pub struct HeapMerge;

impl CrossSumStrategy for HeapMerge {
    fn name(&self) -> &'static str {
        "heap"
    }

    fn sorted_sub(&self) -> bool {
        true
    }

    fn crossing_sums(
        &self,
        suffixes: &[Value],
        prefixes: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Result<Vec<Value>> {
        cross_heap(suffixes, prefixes, k, ops)
    }

    fn best_of(
        &self,
        cross: Vec<Value>,
        left: &[Value],
        right: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Vec<Value> {
        let partial = merge_sorted(&cross, left, k, ops);
        merge_sorted(&partial, right, k, ops)
    }
}

/// Implicit staircase selection for crossing sums, linear selection for
/// `max_sub`. `O(k)` per combine; `max_sub` stays unordered.
#[derive(Debug, Clone, Copy, Default)]
pub struct StaircaseSelect;

impl CrossSumStrategy for StaircaseSelect {
    fn name(&self) -> &'static str {
        "staircase"
    }

    fn sorted_sub(&self) -> bool {
        false
    }

    fn crossing_sums(
        &self,
        suffixes: &[Value],
        prefixes: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Result<Vec<Value>> {
        let matrix = ImplicitSumMatrix::new(suffixes, prefixes)?;
        let want = k.min(matrix.len());
        let values = xy_top_k_band(&matrix, want)?.enumerate();
        ops.cell_evals += matrix.evaluations();
        Ok(values)
    }

    fn best_of(
        &self,
        mut cross: Vec<Value>,
        left: &[Value],
        right: &[Value],
        k: usize,
        ops: &mut OpCount,
    ) -> Vec<Value> {
        cross.reserve(left.len() + right.len());
        cross.extend_from_slice(left);
        cross.extend_from_slice(right);
        select_unordered(cross, k, ops)
    }
}

static HEAP_MERGE: HeapMerge = HeapMerge;
static STAIRCASE_SELECT: StaircaseSelect = StaircaseSelect;
static REGISTRY: [&dyn CrossSumStrategy; 2] = [&HEAP_MERGE, &STAIRCASE_SELECT];

/// Every registered strategy.
pub fn registry() -> &'static [&'static dyn CrossSumStrategy] {
    &REGISTRY
}

/// Looks a strategy up by its registry name.
pub fn strategy(name: &str) -> Result<&'static dyn CrossSumStrategy> {
    registry()
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
}

#[derive(Debug, Clone, Copy)]
pub struct KMaxOptions {
    /// Sort `max_sub` at the root. Off reproduces the bare recurrence.
    pub sort: bool,
}

impl Default for KMaxOptions {
    fn default() -> Self {
        Self { sort: true }
    }
}

/// Number of non-empty subarrays of an array of length `n`.
pub fn subarray_count(n: usize) -> usize {
    n.saturating_mul(n.saturating_add(1)) / 2
}

/// The `k` largest subarray sums of `a`, with `max_sub` sorted.
pub fn max_k(a: &[Value], k: usize, strategy: &dyn CrossSumStrategy) -> Result<KMaxSummary> {
    max_k_with(a, k, strategy, KMaxOptions::default()).map(|(s, _)| s)
}

/// As [`max_k`], with options and the accumulated work counters.
pub fn max_k_with(
    a: &[Value],
    k: usize,
    strategy: &dyn CrossSumStrategy,
    options: KMaxOptions,
) -> Result<(KMaxSummary, OpCount)> {
    validate_input(a)?;
    let max = subarray_count(a.len());
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let leaf = ceil_sqrt(k).max(1);
    let mut ops = OpCount::default();
    let mut summary = solve(a, k, leaf, strategy, &mut ops)?;
    if options.sort && !strategy.sorted_sub() {
        summary.max_sub.sort_unstable_by(|x, y| y.cmp(x));
    }
    Ok((summary, ops))
}

fn solve(
    a: &[Value],
    k: usize,
    leaf: usize,
    strategy: &dyn CrossSumStrategy,
    ops: &mut OpCount,
) -> Result<KMaxSummary> {
    if a.len() <= leaf {
        return base(a, k, strategy.sorted_sub(), ops);
    }
    let mid = (a.len() - 1) / 2;
    let left = solve(&a[..=mid], k, leaf, strategy, ops)?;
    let right = solve(&a[mid + 1..], k, leaf, strategy, ops)?;
    combine_counted(&left, &right, k, strategy, ops)
}

/// Brute-force summary of a short segment, with every list sorted.
pub fn max_k_base(segment: &[Value], k: usize) -> Result<KMaxSummary> {
    validate_input(segment)?;
    if k == 0 {
        return Err(Error::KOutOfRange {
            k,
            max: subarray_count(segment.len()),
        });
    }
    base(segment, k, true, &mut OpCount::default())
}

fn sort_counted(values: &mut [Value], ops: &mut OpCount) {
    let comparisons = Cell::new(0u64);
    values.sort_unstable_by(|x, y| {
        comparisons.set(comparisons.get() + 1);
        y.cmp(x)
    });
    ops.comparisons += comparisons.get();
}

// Callers validate the input, so no partial sum can overflow.
fn base(segment: &[Value], k: usize, sorted_sub: bool, ops: &mut OpCount) -> Result<KMaxSummary> {
    let s = segment.len();
    let mut prefixes = Vec::with_capacity(s);
    let mut acc = 0;
    for &v in segment {
        acc += v;
        prefixes.push(acc);
    }
    let total = acc;
    let mut suffixes = Vec::with_capacity(s);
    acc = 0;
    for &v in segment.iter().rev() {
        acc += v;
        suffixes.push(acc);
    }
    let mut all = Vec::with_capacity(subarray_count(s));
    for start in 0..s {
        let mut run = 0;
        for &v in &segment[start..] {
            run += v;
            all.push(run);
        }
    }

    let mut max_left = select_unordered(prefixes, k, ops);
    sort_counted(&mut max_left, ops);
    let mut max_right = select_unordered(suffixes, k, ops);
    sort_counted(&mut max_right, ops);
    let mut max_sub = select_unordered(all, k, ops);
    if sorted_sub {
        sort_counted(&mut max_sub, ops);
    }
    Ok(KMaxSummary {
        max_left: TopList::from_sorted_unchecked(max_left, k),
        max_right: TopList::from_sorted_unchecked(max_right, k),
        sum: total,
        max_sub,
    })
}

/// Summary of the concatenation of the segments behind `left` and `right`.
///
/// `left.max_sub` and `right.max_sub` must be sorted when the strategy
/// keeps sorted lists.
pub fn combine(
    left: &KMaxSummary,
    right: &KMaxSummary,
    k: usize,
    strategy: &dyn CrossSumStrategy,
) -> Result<KMaxSummary> {
    combine_counted(left, right, k, strategy, &mut OpCount::default())
}

fn combine_counted(
    left: &KMaxSummary,
    right: &KMaxSummary,
    k: usize,
    strategy: &dyn CrossSumStrategy,
    ops: &mut OpCount,
) -> Result<KMaxSummary> {
    ops.combines += 1;
    let shifted = add_scalar(left.sum, right.max_left.as_slice())?;
    let max_left = merge_sorted(left.max_left.as_slice(), &shifted, k, ops);
    let shifted = add_scalar(right.sum, left.max_right.as_slice())?;
    let max_right = merge_sorted(right.max_right.as_slice(), &shifted, k, ops);
    let sum = left.sum.checked_add(right.sum).ok_or(Error::Overflow)?;
    let cross =
        strategy.crossing_sums(left.max_right.as_slice(), right.max_left.as_slice(), k, ops)?;
    let max_sub = strategy.best_of(cross, &left.max_sub, &right.max_sub, k, ops);
    Ok(KMaxSummary {
        max_left: TopList::from_sorted_unchecked(max_left, k),
        max_right: TopList::from_sorted_unchecked(max_right, k),
        sum,
        max_sub,
    })
}
