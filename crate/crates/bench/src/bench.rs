//! Timed runs over a grid of `(n, k, algorithm)` with CSV output.

use std::io::Write;
use std::time::Instant;

use kmax_core::Value;
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::BenchAlgorithm;
use crate::input::Distribution;

/// Inputs up to this size are cross-checked against the oracle in verify mode.
pub const VERIFY_LIMIT: usize = 2000;

/// How `k` is chosen for each input size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KRule {
    Fixed(usize),
    EqualsN,
    List(Vec<usize>),
}

impl KRule {
    fn values(&self, n: usize) -> Vec<usize> {
        match self {
            KRule::Fixed(k) => vec![*k],
            KRule::EqualsN => vec![n],
            KRule::List(ks) => ks.clone(),
        }
    }
}

#[derive(Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub k_rule: KRule,
    pub trials: usize,
    pub seed: u64,
    pub algorithms: Vec<&'static dyn BenchAlgorithm>,
    pub distribution: Distribution,
    pub verify: bool,
    pub sort: bool,
    pub jobs: usize,
}

impl BenchConfig {
    pub fn new(algorithms: Vec<&'static dyn BenchAlgorithm>) -> Self {
        Self {
            sizes: vec![1000],
            k_rule: KRule::EqualsN,
            trials: 10,
            seed: 0,
            algorithms,
            distribution: Distribution::default(),
            verify: false,
            sort: true,
            jobs: 1,
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub algorithm: String,
    pub trials: usize,
    pub mean_ms: f64,
    pub stddev_ms: f64,
    pub op_count: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Rows that could not run, with the reason.
    pub errors: Vec<String>,
    /// Verification failures.
    pub mismatches: Vec<String>,
}

struct Trial {
    millis: f64,
    op_count: u64,
    verified: Option<bool>,
}

fn run_trial(
    alg: &dyn BenchAlgorithm,
    n: usize,
    k: usize,
    seed: u64,
    config: &BenchConfig,
    verify: bool,
) -> kmax_core::Result<Trial> {
    let input = alg.prepare(n, seed, config.distribution);
    let start = Instant::now();
    let outcome = alg.run(&input, k, config.sort)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let verified = if verify && n <= VERIFY_LIMIT {
        let mut got: Vec<Value> = outcome.values;
        got.sort_unstable_by(|a, b| b.cmp(a));
        Some(got == alg.reference(&input, k)?)
    } else {
        None
    };
    Ok(Trial {
        millis,
        op_count: outcome.op_count,
        verified,
    })
}

/// Mean and sample standard deviation; zero spread for a single sample.
pub fn mean_stddev(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Runs every `(n, k, algorithm)` cell of the grid. One untimed warm-up run
/// precedes the trials of each cell; trial `t` uses seed `seed + t`.
pub fn run_bench(config: &BenchConfig) -> BenchReport {
    let mut report = BenchReport::default();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    for &n in &config.sizes {
        for k in config.k_rule.values(n) {
            for &alg in &config.algorithms {
                let label = format!("n={n} k={k} algorithm={}", alg.name());
                if n == 0 || k == 0 || k > alg.max_k(n) {
                    report
                        .errors
                        .push(format!("{label}: k must be in 1..={}", alg.max_k(n)));
                    continue;
                }
                if config.trials == 0 {
                    report
                        .errors
                        .push(format!("{label}: trials must be positive"));
                    continue;
                }
                if let Err(e) = run_trial(alg, n, k, config.seed, config, false) {
                    report.errors.push(format!("{label}: {e}"));
                    continue;
                }
                let run = |t: usize| {
                    run_trial(
                        alg,
                        n,
                        k,
                        config.seed.wrapping_add(t as u64),
                        config,
                        config.verify,
                    )
                };
                let trials: Result<Vec<Trial>, _> = if config.jobs > 1 {
                    pool.install(|| (0..config.trials).into_par_iter().map(run).collect())
                } else {
                    (0..config.trials).map(run).collect()
                };
                let trials = match trials {
                    Ok(t) => t,
                    Err(e) => {
                        report.errors.push(format!("{label}: {e}"));
                        continue;
                    }
                };
                let bad = trials.iter().filter(|t| t.verified == Some(false)).count();
                if bad > 0 {
                    report.mismatches.push(format!(
                        "{label}: {bad} of {} trials disagree with the oracle",
                        trials.len()
                    ));
                }
                let times: Vec<f64> = trials.iter().map(|t| t.millis).collect();
                let (mean_ms, stddev_ms) = mean_stddev(&times);
                let ops: u64 = trials.iter().map(|t| t.op_count).sum();
                report.rows.push(BenchRow {
                    n,
                    k,
                    algorithm: alg.name().to_string(),
                    trials: trials.len(),
                    mean_ms,
                    stddev_ms,
                    op_count: (ops as f64 / trials.len() as f64).round() as u64,
                });
            }
        }
    }
    report
}

/// Writes rows as CSV with the header `n,k,algorithm,trials,mean_ms,stddev_ms,op_count`.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if rows.is_empty() {
        writer.write_record([
            "n",
            "k",
            "algorithm",
            "trials",
            "mean_ms",
            "stddev_ms",
            "op_count",
        ])?;
    }
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::lookup;

    #[test]
    fn shape_contract() {
        let mut config = BenchConfig::new(vec![lookup("kmax-staircase").unwrap()]);
        config.sizes = vec![10, 100];
        config.trials = 3;
        let report = run_bench(&config);
        assert!(report.errors.is_empty());
        assert_eq!(report.rows.len(), 2);
        let mut buf = Vec::new();
        write_csv(&report.rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("n,k,algorithm,trials,mean_ms,stddev_ms,op_count")
        );
        assert!(lines.next().unwrap().starts_with("10,10,kmax-staircase,3,"));
        assert!(lines
            .next()
            .unwrap()
            .starts_with("100,100,kmax-staircase,3,"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn single_trial_has_zero_spread() {
        let mut config = BenchConfig::new(vec![lookup("kmax-heap").unwrap()]);
        config.sizes = vec![50];
        config.trials = 1;
        let report = run_bench(&config);
        assert_eq!(report.rows[0].stddev_ms, 0.0);
        assert_eq!(mean_stddev(&[2.0, 4.0]), (3.0, 2f64.sqrt()));
    }

    #[test]
    fn invalid_rows_do_not_stop_the_run() {
        let mut config =
            BenchConfig::new(vec![lookup("max1").unwrap(), lookup("kmax-heap").unwrap()]);
        config.sizes = vec![20];
        config.k_rule = KRule::List(vec![1, 5]);
        config.trials = 2;
        config.verify = true;
        let report = run_bench(&config);
        // max1 only accepts k = 1.
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.rows.len(), 3);
        assert!(report.mismatches.is_empty());
    }

    #[test]
    fn parallel_trials_give_same_counts() {
        let mut config = BenchConfig::new(vec![lookup("xy-topk").unwrap()]);
        config.sizes = vec![64];
        config.trials = 4;
        let serial = run_bench(&config);
        config.jobs = 3;
        let parallel = run_bench(&config);
        assert_eq!(serial.rows[0].op_count, parallel.rows[0].op_count);
    }
}
