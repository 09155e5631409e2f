//! Benchmark harness and input handling for the `kmax` command-line tool.

pub mod algorithms;
pub mod bench;
pub mod input;

pub use algorithms::{lookup, registry, BenchAlgorithm, Instance, Outcome};
pub use bench::{run_bench, write_csv, BenchConfig, BenchReport, BenchRow, KRule};
pub use input::{gen_input, parse_values, Distribution, InputError};
