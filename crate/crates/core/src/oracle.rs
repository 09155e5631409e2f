//! Brute-force references. Plain enumeration and a full sort; nothing here
//! is shared with the algorithms under test.

use crate::{Error, Result, TopList, Value};

/// Kadane's running-maximum scan over non-empty subarrays.
pub fn kadane(a: &[Value]) -> Result<Value> {
    let (&first, rest) = a.split_first().ok_or(Error::EmptyInput)?;
    let mut best = first;
    let mut run = first;
    for &v in rest {
        run = if run > 0 {
            run.checked_add(v).ok_or(Error::Overflow)?
        } else {
            v
        };
        best = best.max(run);
    }
    Ok(best)
}

/// All `n(n+1)/2` subarray sums from prefix differences, sorted, truncated.
pub fn brute_top_k_subarrays(a: &[Value], k: usize) -> Result<TopList> {
    let n = a.len();
    let max = n * (n + 1) / 2;
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let mut prefix = vec![0i64; n + 1];
    for (i, &v) in a.iter().enumerate() {
        prefix[i + 1] = prefix[i].checked_add(v).ok_or(Error::Overflow)?;
    }
    let mut sums = Vec::with_capacity(max);
    for end in 1..=n {
        for start in 0..end {
            sums.push(
                prefix[end]
                    .checked_sub(prefix[start])
                    .ok_or(Error::Overflow)?,
            );
        }
    }
    Ok(TopList::from_unsorted(sums, k))
}

/// All pairwise sums `x + y`, sorted, truncated.
pub fn brute_xy_top_k(x: &[Value], y: &[Value], k: usize) -> Result<TopList> {
    let max = x.len() * y.len();
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let mut sums = Vec::with_capacity(max);
    for &a in x {
        for &b in y {
            sums.push(a.checked_add(b).ok_or(Error::Overflow)?);
        }
    }
    Ok(TopList::from_unsorted(sums, k))
}
