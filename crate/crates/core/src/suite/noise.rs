use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded stream of uniform reals in `[0, 1)` feeding the noisy functions.
#[derive(Debug, Clone)]
pub struct NoiseSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl NoiseSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    #[inline]
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }
}

impl Default for NoiseSource {
    fn default() -> Self {
        Self::new(0)
    }
}
