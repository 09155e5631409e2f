//! Benchmarkable algorithms, registered by name.

use kmax_core::kmax::{self, subarray_count, KMaxOptions};
use kmax_core::max1::maximum_subarray_with_stats;
use kmax_core::oracle::{brute_top_k_subarrays, brute_xy_top_k, kadane};
use kmax_core::xy_select::xy_top_k_values;
use kmax_core::{ImplicitSumMatrix, Result, Value};

use crate::input::{gen_input, Distribution};

/// Generated input for one trial. `pair` is only filled for `X + Y` runs.
#[derive(Debug, Clone)]
pub struct Instance {
    pub values: Vec<Value>,
    pub pair: Option<Vec<Value>>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub values: Vec<Value>,
    pub op_count: u64,
}

pub trait BenchAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;

    /// Largest admissible `k` for input size `n`.
    fn max_k(&self, n: usize) -> usize;

    fn prepare(&self, n: usize, seed: u64, dist: Distribution) -> Instance {
        Instance {
            values: gen_input(n, seed, dist),
            pair: None,
        }
    }

    fn run(&self, input: &Instance, k: usize, sort: bool) -> Result<Outcome>;

    /// Brute-force answer, sorted non-increasing.
    fn reference(&self, input: &Instance, k: usize) -> Result<Vec<Value>>;
}

struct Max1;

impl BenchAlgorithm for Max1 {
    fn name(&self) -> &'static str {
        "max1"
    }

    fn max_k(&self, _n: usize) -> usize {
        1
    }

    fn run(&self, input: &Instance, _k: usize, _sort: bool) -> Result<Outcome> {
        let (summary, combines) = maximum_subarray_with_stats(&input.values)?;
        Ok(Outcome {
            values: vec![summary.max_sub.sum],
            op_count: combines as u64,
        })
    }

    fn reference(&self, input: &Instance, _k: usize) -> Result<Vec<Value>> {
        Ok(vec![kadane(&input.values)?])
    }
}

struct KMax(&'static str, &'static str);

impl BenchAlgorithm for KMax {
    fn name(&self) -> &'static str {
        self.0
    }

    fn max_k(&self, n: usize) -> usize {
        subarray_count(n)
    }

    fn run(&self, input: &Instance, k: usize, sort: bool) -> Result<Outcome> {
        let strategy = kmax::strategy(self.1)?;
        let (summary, ops) = kmax::max_k_with(&input.values, k, strategy, KMaxOptions { sort })?;
        Ok(Outcome {
            values: summary.max_sub,
            op_count: ops.total(),
        })
    }

    fn reference(&self, input: &Instance, k: usize) -> Result<Vec<Value>> {
        Ok(brute_top_k_subarrays(&input.values, k)?.into_vec())
    }
}

struct XyTopK;

fn sort_desc(values: &mut [Value]) {
    values.sort_unstable_by(|a, b| b.cmp(a));
}

impl BenchAlgorithm for XyTopK {
    fn name(&self) -> &'static str {
        "xy-topk"
    }

    fn max_k(&self, n: usize) -> usize {
        n.saturating_mul(n)
    }

    fn prepare(&self, n: usize, seed: u64, dist: Distribution) -> Instance {
        let mut x = gen_input(n, seed, dist);
        let mut y = gen_input(n, seed ^ 0x9e37_79b9_7f4a_7c15, dist);
        sort_desc(&mut x);
        sort_desc(&mut y);
        Instance {
            values: x,
            pair: Some(y),
        }
    }

    fn run(&self, input: &Instance, k: usize, sort: bool) -> Result<Outcome> {
        let y = input.pair.as_deref().unwrap_or(&input.values);
        let matrix = ImplicitSumMatrix::new(&input.values, y)?;
        let mut values = xy_top_k_values(&matrix, k)?;
        if sort {
            sort_desc(&mut values);
        }
        Ok(Outcome {
            values,
            op_count: matrix.evaluations(),
        })
    }

    fn reference(&self, input: &Instance, k: usize) -> Result<Vec<Value>> {
        let y = input.pair.as_deref().unwrap_or(&input.values);
        Ok(brute_xy_top_k(&input.values, y, k)?.into_vec())
    }
}

struct Oracle;

impl BenchAlgorithm for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn max_k(&self, n: usize) -> usize {
        subarray_count(n)
    }

    fn run(&self, input: &Instance, k: usize, _sort: bool) -> Result<Outcome> {
        let n = input.values.len() as u64;
        Ok(Outcome {
            values: brute_top_k_subarrays(&input.values, k)?.into_vec(),
            op_count: n * (n + 1) / 2,
        })
    }

    fn reference(&self, input: &Instance, k: usize) -> Result<Vec<Value>> {
        Ok(brute_top_k_subarrays(&input.values, k)?.into_vec())
    }
}

static MAX1: Max1 = Max1;
static KMAX_HEAP: KMax = KMax("kmax-heap", "heap");
static KMAX_STAIRCASE: KMax = KMax("kmax-staircase", "staircase");
static XY_TOPK: XyTopK = XyTopK;
static ORACLE: Oracle = Oracle;
static REGISTRY: [&dyn BenchAlgorithm; 5] = [&MAX1, &KMAX_HEAP, &KMAX_STAIRCASE, &XY_TOPK, &ORACLE];

pub fn registry() -> &'static [&'static dyn BenchAlgorithm] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Option<&'static dyn BenchAlgorithm> {
    registry().iter().copied().find(|a| a.name() == name)
}
