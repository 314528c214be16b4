//! Shared inputs for the criterion benchmarks.

use matint_core::workload::Lcg;
use matint_core::RationalMatrix;

/// `count` seeded `n × n` integer matrices, the same sequence `matint bench`
/// generates.
pub fn matrices(n: usize, count: usize, seed: u64) -> Vec<RationalMatrix> {
    let mut rng = Lcg::new(seed);
    (0..count).map(|_| rng.matrix(n)).collect()
}
