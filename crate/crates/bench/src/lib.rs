//! Benchmark inputs shared by the criterion targets.

use rootloop_core::{fixtures, MutationWord, Seed};

/// Initial seeds of the finite-type fixtures used by the benches.
pub fn roots() -> Vec<(&'static str, Seed)> {
    ["a2", "b2", "g2", "a3", "b3", "cycle3", "a4", "d4"]
        .into_iter()
        .map(|name| (name, Seed::initial(&fixtures::builtin(name).unwrap())))
        .collect()
}

/// `[1, 2, ..., n]` repeated `times` times.
pub fn sweep(n: usize, times: usize) -> MutationWord {
    MutationWord::new((0..n).collect()).repeated(times)
}
