//! Linear-time divide and conquer for the single maximum subarray.
//!
//! Each recursion node returns four values (best prefix, best suffix,
//! total, best subarray) so the combine step is constant time and the
//! recurrence is `T(n) = 2T(n/2) + O(1)`.

use std::cmp::Ordering;

use crate::{validate_input, Result, Value};

/// A sum together with the inclusive index range that produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witnessed {
    pub sum: Value,
    pub start: usize,
    pub end: usize,
}

impl Witnessed {
    /// Larger sum first, then smaller start, then larger end.
    fn better(self, other: Self) -> Self {
        let ord = self
            .sum
            .cmp(&other.sum)
            .then(other.start.cmp(&self.start))
            .then(self.end.cmp(&other.end));
        if ord == Ordering::Less {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Max1Summary {
    /// Best subarray starting at the segment's first index.
    pub max_left: Witnessed,
    /// Best subarray ending at the segment's last index.
    pub max_right: Witnessed,
    pub sum: Value,
    pub max_sub: Witnessed,
}

/// Maximum non-empty subarray sum of `a` with a witnessing range.
///
/// Ties are broken leftmost-longest: smallest start, then largest end.
pub fn maximum_subarray(a: &[Value]) -> Result<Max1Summary> {
    maximum_subarray_with_stats(a).map(|(s, _)| s)
}

/// As [`maximum_subarray`], also returning the number of combine steps.
pub fn maximum_subarray_with_stats(a: &[Value]) -> Result<(Max1Summary, usize)> {
    validate_input(a)?;
    let mut combines = 0;
    let summary = solve(a, 0, a.len() - 1, &mut combines);
    Ok((summary, combines))
}

fn solve(a: &[Value], low: usize, high: usize, combines: &mut usize) -> Max1Summary {
    if low == high {
        let w = Witnessed {
            sum: a[low],
            start: low,
            end: low,
        };
        return Max1Summary {
            max_left: w,
            max_right: w,
            sum: a[low],
            max_sub: w,
        };
    }
    let mid = low + (high - low) / 2;
    let left = solve(a, low, mid, combines);
    let right = solve(a, mid + 1, high, combines);
    *combines += 1;
    combine(&left, &right)
}

// Inputs are validated so every subarray sum fits; plain adds cannot overflow.
fn combine(left: &Max1Summary, right: &Max1Summary) -> Max1Summary {
    let extended_left = Witnessed {
        sum: left.sum + right.max_left.sum,
        start: left.max_left.start,
        end: right.max_left.end,
    };
    let extended_right = Witnessed {
        sum: right.sum + left.max_right.sum,
        start: left.max_right.start,
        end: right.max_right.end,
    };
    let cross = Witnessed {
        sum: left.max_right.sum + right.max_left.sum,
        start: left.max_right.start,
        end: right.max_left.end,
    };
    Max1Summary {
        max_left: left.max_left.better(extended_left),
        max_right: right.max_right.better(extended_right),
        sum: left.sum + right.sum,
        max_sub: left.max_sub.better(cross).better(right.max_sub),
    }
}
