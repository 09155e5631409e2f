//! Reading and generating integer arrays.

use std::io::BufRead;

use kmax_core::Value;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: `{text}` is not a signed decimal integer")]
    Parse { line: usize, text: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Reads one signed decimal integer per line. Blank lines are skipped.
pub fn parse_values<R: BufRead>(reader: R) -> Result<Vec<Value>, InputError> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let v = text.parse::<Value>().map_err(|_| InputError::Parse {
            line: idx + 1,
            text: text.to_string(),
        })?;
        out.push(v);
    }
    Ok(out)
}

/// Integers drawn uniformly from `low..=high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distribution {
    pub low: Value,
    pub high: Value,
}

impl Default for Distribution {
    fn default() -> Self {
        Self {
            low: -1_000_000,
            high: 1_000_000,
        }
    }
}

/// `n` values from `dist`, reproducible for a given `(n, seed, dist)`.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`;
/// both the stream and rand's integer range sampling are value-stable
/// across platforms.
pub fn gen_input(n: usize, seed: u64, dist: Distribution) -> Vec<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| rng.gen_range(dist.low..=dist.high))
        .collect()
}
