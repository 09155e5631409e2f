use crate::{Error, Result, Value};

/// At most `capacity` values in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopList {
    values: Vec<Value>,
    capacity: usize,
}

impl TopList {
    /// Wraps `values`, checking order and length.
    pub fn new(values: Vec<Value>, capacity: usize) -> Result<Self> {
        if !is_non_increasing(&values) {
            return Err(Error::NotSorted);
        }
        if capacity == 0 || values.len() > capacity {
            return Err(Error::KOutOfRange {
                k: capacity,
                max: values.len(),
            });
        }
        Ok(Self { values, capacity })
    }

    /// Sorts `values` non-increasing and keeps the first `capacity`.
    pub fn from_unsorted(mut values: Vec<Value>, capacity: usize) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.truncate(capacity);
        Self { values, capacity }
    }

    pub(crate) fn from_sorted_unchecked(values: Vec<Value>, capacity: usize) -> Self {
        debug_assert!(is_non_increasing(&values));
        debug_assert!(values.len() <= capacity);
        Self { values, capacity }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first(&self) -> Option<Value> {
        self.values.first().copied()
    }

    pub fn as_slice(&self) -> &[Value] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<Value> {
        self.values
    }
}

impl AsRef<[Value]> for TopList {
    fn as_ref(&self) -> &[Value] {
        &self.values
    }
}

pub(crate) fn is_non_increasing(values: &[Value]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}
