use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kmax_bench::bench::VERIFY_LIMIT;
use kmax_bench::{gen_input, lookup, parse_values, registry, run_bench, write_csv};
use kmax_bench::{BenchConfig, Distribution, InputError, KRule};
use kmax_core::kmax::{self, KMaxOptions};
use kmax_core::max1::maximum_subarray_with_stats;
use kmax_core::oracle::{brute_top_k_subarrays, brute_xy_top_k, kadane};
use kmax_core::xy_select::xy_top_k_values;
use kmax_core::{Error, ImplicitSumMatrix, Value};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kmax",
    version,
    about = "k-maximum subarrays and X+Y top-k selection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum subarray sum (k = 1) by linear divide and conquer.
    Max1 {
        /// Input file, one integer per line; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long)]
        counters: bool,
        #[arg(long)]
        verify: bool,
    },
    /// The k largest subarray sums.
    Kmax {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "staircase")]
        strategy: String,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// The k largest sums x + y for x in X, y in Y.
    XyTopk {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Print n seeded random integers.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        dist: DistArgs,
        /// Sort non-increasing.
        #[arg(long)]
        sorted: bool,
    },
    /// Timed runs over a grid of sizes, written as CSV to stdout.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Fixed k, or `n` for k = n.
        #[arg(long, conflicts_with = "ks")]
        k: Option<String>,
        /// Explicit list of k values.
        #[arg(long, value_delimiter = ',')]
        ks: Option<Vec<usize>>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated algorithm names.
        #[arg(long, value_delimiter = ',', default_value = "kmax-staircase")]
        algorithm: Vec<String>,
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        no_sort: bool,
        /// Accepted for symmetry; op counts are always in the CSV.
        #[arg(long)]
        counters: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct RunFlags {
    /// Skip the final sort of the output.
    #[arg(long)]
    no_sort: bool,
    /// Print work counters to stderr.
    #[arg(long)]
    counters: bool,
    /// Cross-check against brute force (inputs up to 2000 values).
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long, default_value_t = -1_000_000, allow_hyphen_values = true)]
    low: Value,
    #[arg(long, default_value_t = 1_000_000, allow_hyphen_values = true)]
    high: Value,
}

impl DistArgs {
    fn get(&self) -> Result<Distribution, Failure> {
        if self.low > self.high {
            return Err(Failure::usage("--low must not exceed --high"));
        }
        Ok(Distribution {
            low: self.low,
            high: self.high,
        })
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyInput | Error::Overflow | Error::NotSorted => EXIT_INPUT,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let code = match e {
            InputError::Parse { .. } => EXIT_INPUT,
            InputError::Io(_) => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

fn read_values(path: Option<&Path>) -> Result<Vec<Value>, Failure> {
    match path {
        None => Ok(parse_values(io::stdin().lock())?),
        Some(p) if p == Path::new("-") => Ok(parse_values(io::stdin().lock())?),
        Some(p) => {
            let file =
                File::open(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            Ok(parse_values(BufReader::new(file))?)
        }
    }
}

fn print_values(values: &[Value]) -> Result<(), Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    for v in values {
        writeln!(out, "{v}")?;
    }
    out.flush()?;
    Ok(())
}

fn check(
    verify: bool,
    n: usize,
    got: &[Value],
    expect: impl FnOnce() -> Result<Vec<Value>, Error>,
) -> Result<(), Failure> {
    if !verify {
        return Ok(());
    }
    if n > VERIFY_LIMIT {
        eprintln!("# verify skipped: input longer than {VERIFY_LIMIT}");
        return Ok(());
    }
    let mut sorted = got.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != expect()? {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: "result disagrees with brute force".into(),
        });
    }
    eprintln!("# verify ok");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Max1 {
            input,
            counters,
            verify,
        } => {
            let a = read_values(input.as_deref())?;
            let (s, combines) = maximum_subarray_with_stats(&a)?;
            print_values(&[s.max_sub.sum])?;
            eprintln!("# start={} end={}", s.max_sub.start, s.max_sub.end);
            if counters {
                eprintln!("# combines={combines}");
            }
            check(verify, a.len(), &[s.max_sub.sum], || Ok(vec![kadane(&a)?]))
        }
        Command::Kmax {
            input,
            k,
            strategy,
            flags,
        } => {
            let a = read_values(input.as_deref())?;
            let strategy = kmax::strategy(&strategy)?;
            let options = KMaxOptions {
                sort: !flags.no_sort,
            };
            let (summary, ops) = kmax::max_k_with(&a, k, strategy, options)?;
            print_values(&summary.max_sub)?;
            if flags.counters {
                eprintln!(
                    "# comparisons={} cell_evals={} combines={}",
                    ops.comparisons, ops.cell_evals, ops.combines
                );
            }
            check(flags.verify, a.len(), &summary.max_sub, || {
                Ok(brute_top_k_subarrays(&a, k)?.into_vec())
            })
        }
        Command::XyTopk { x, y, k, flags } => {
            let mut xs = read_values(Some(&x))?;
            let mut ys = read_values(Some(&y))?;
            xs.sort_unstable_by(|a, b| b.cmp(a));
            ys.sort_unstable_by(|a, b| b.cmp(a));
            let matrix = ImplicitSumMatrix::new(&xs, &ys)?;
            let mut values = xy_top_k_values(&matrix, k)?;
            if !flags.no_sort {
                values.sort_unstable_by(|a, b| b.cmp(a));
            }
            print_values(&values)?;
            if flags.counters {
                eprintln!("# cell_evals={}", matrix.evaluations());
            }
            check(flags.verify, xs.len().max(ys.len()), &values, || {
                Ok(brute_xy_top_k(&xs, &ys, k)?.into_vec())
            })
        }
        Command::Gen {
            n,
            seed,
            dist,
            sorted,
        } => {
            if n == 0 {
                return Err(Failure::usage("--n must be positive"));
            }
            let mut values = gen_input(n, seed, dist.get()?);
            if sorted {
                values.sort_unstable_by(|a, b| b.cmp(a));
            }
            print_values(&values)
        }
        Command::Bench {
            sizes,
            k,
            ks,
            trials,
            seed,
            algorithm,
            dist,
            verify,
            no_sort,
            counters: _,
            jobs,
        } => {
            let algorithms = algorithm
                .iter()
                .map(|name| {
                    lookup(name).ok_or_else(|| {
                        let known: Vec<_> = registry().iter().map(|a| a.name()).collect();
                        Failure::usage(format!(
                            "unknown algorithm `{name}` (known: {})",
                            known.join(", ")
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let k_rule = match (k.as_deref(), ks) {
                (_, Some(list)) => KRule::List(list),
                (None, None) | (Some("n"), None) => KRule::EqualsN,
                (Some(text), None) => KRule::Fixed(text.parse().map_err(|_| {
                    Failure::usage(format!("--k expects an integer or `n`, got `{text}`"))
                })?),
            };
            if trials == 0 {
                return Err(Failure::usage("--trials must be positive"));
            }
            let config = BenchConfig {
                sizes,
                k_rule,
                trials,
                seed,
                algorithms,
                distribution: dist.get()?,
                verify,
                sort: !no_sort,
                jobs,
            };
            let report = run_bench(&config);
            for e in &report.errors {
                eprintln!("# skipped {e}");
            }
            write_csv(&report.rows, io::stdout().lock())
                .map_err(|e| Failure::usage(e.to_string()))?;
            if let Some(first) = report.mismatches.first() {
                for m in &report.mismatches {
                    eprintln!("# mismatch {m}");
                }
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: first.clone(),
                });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kmax: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
