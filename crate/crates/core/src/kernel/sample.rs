//! Seeded sampling of scalars and vectors.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use super::matrix::Matrix;
use super::{Ring, Scalar};

/// Rationals are sampled as integers in this symmetric range.
const RATIONAL_SPAN: u64 = 9;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.next_u64() % n
    }

    pub fn scalar(&mut self, ring: Ring) -> Scalar {
        match ring {
            Ring::Prime(p) => ring.element(self.below(p as u64) as u32),
            Ring::Rational => {
                ring.int(self.below(2 * RATIONAL_SPAN + 1) as i64 - RATIONAL_SPAN as i64)
            }
        }
    }

    pub fn vector(&mut self, ring: Ring, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar(ring)).collect()
    }

    pub fn matrix(&mut self, ring: Ring, rows: usize, cols: usize) -> Matrix {
        Matrix::new(ring, rows, cols, self.vector(ring, rows * cols))
    }

    /// A random invertible matrix (rejection sampling).
    pub fn invertible(&mut self, ring: Ring, n: usize) -> Matrix {
        loop {
            let m = self.matrix(ring, n, n);
            if !m.det().is_zero() {
                return m;
            }
        }
    }
}
