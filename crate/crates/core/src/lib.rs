//! Divide-and-conquer algorithms for the k-maximum subarrays problem.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`] and [`band`] hold the implicit `X + Y` sum matrix and the
//!   interval ("staircase") representation of cell subsets over it.
//! * [`max1`] is the linear-time divide and conquer for `k = 1`.
//! * [`cross_heap`] has the combine-phase primitives: bounded merge, scalar
//!   shift, linear selection and the heap-frontier crossing sums.
//! * [`xy_select`] selects the `k` largest sums of two sorted arrays while
//!   touching only `O(√k log³ k)` matrix cells.
//! * [`kmax`] is the `k`-maximum driver, parameterised by a
//!   [`kmax::CrossSumStrategy`] looked up by name in [`kmax::registry`].
//! * [`oracle`] contains brute-force reference implementations.

pub mod band;
pub mod cross_heap;
mod error;
pub mod kmax;
pub mod matrix;
pub mod max1;
mod ops;
pub mod oracle;
mod toplist;
pub mod xy_select;

pub use band::StaircaseBand;
pub use error::{Error, Result};
pub use kmax::{max_k, CrossSumStrategy, KMaxOptions, KMaxSummary};
pub use matrix::ImplicitSumMatrix;
pub use max1::{maximum_subarray, Max1Summary};
pub use ops::OpCount;
pub use toplist::TopList;

/// A sum value. All arithmetic on values is overflow-checked.
pub type Value = i64;

/// Rejects inputs whose subarray sums could leave the `i64` range.
///
/// Every subarray sum is bounded in magnitude by `Σ |a_i|`, so it is enough
/// to check that this total fits.
pub fn validate_input(values: &[Value]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    values
        .iter()
        .try_fold(0i64, |acc, &v| acc.checked_add(v.checked_abs()?))
        .map(|_| ())
        .ok_or(Error::Overflow)
}

/// Smallest `s` with `s * s >= k`.
pub fn ceil_sqrt(k: usize) -> usize {
    let mut s = (k as f64).sqrt() as usize;
    while s * s < k {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= k {
        s -= 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sqrt_small() {
        let expect = [0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4];
        for (k, &s) in expect.iter().enumerate() {
            assert_eq!(ceil_sqrt(k), s, "k={k}");
        }
        assert_eq!(ceil_sqrt(1 << 20), 1 << 10);
        assert_eq!(ceil_sqrt((1 << 20) + 1), (1 << 10) + 1);
    }

    #[test]
    fn validate_rejects_overflowing_totals() {
        assert_eq!(validate_input(&[]), Err(Error::EmptyInput));
        assert!(validate_input(&[i64::MAX]).is_ok());
        assert_eq!(validate_input(&[i64::MAX, 1]), Err(Error::Overflow));
        assert_eq!(validate_input(&[i64::MIN]), Err(Error::Overflow));
        assert!(validate_input(&[-5, 3, 0]).is_ok());
    }
}
