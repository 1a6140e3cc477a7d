//! Shared fixtures for the benchmarks.

use qposet_core::Instance;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `count` instances of `n` values drawn uniformly from `0..=max`.
pub fn uniform_instances(n: usize, max: i64, count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
            Instance::normalize(&raw).expect("nonnegative values")
        })
        .collect()
}
