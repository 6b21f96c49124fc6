//! Seeded random rational inputs.
//!
//! Components are `p/q` with `p` in `-9..=9` and `q` in `1..=4`. The same
//! seed always yields the same sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;
use crate::vector::Vector;

pub const NUMER_RANGE: std::ops::RangeInclusive<i64> = -9..=9;
pub const DENOM_RANGE: std::ops::RangeInclusive<i64> = 1..=4;

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(NUMER_RANGE);
        let q = self.rng.gen_range(DENOM_RANGE);
        Rational::new(p, q).expect("denominator is positive")
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        Vector::new((0..dim).map(|_| self.rational()).collect()).expect("dim > 0")
    }

    pub fn vectors<const K: usize>(&mut self, dim: usize) -> [Vector; K] {
        std::array::from_fn(|_| self.vector(dim))
    }

    pub fn pairs(&mut self, dim: usize, count: usize) -> Vec<(Vector, Vector)> {
        (0..count).map(|_| (self.vector(dim), self.vector(dim))).collect()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}
