//! Seeded synthetic data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random walk starting at 0 with steps uniform in (-1, 1).
pub fn random_walk(len: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = 0.0;
    (0..len)
        .map(|_| {
            x += rng.random_range(-1.0..1.0);
            x
        })
        .collect()
}
