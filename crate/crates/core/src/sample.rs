//! Seeded pseudo-random overpartitions for property checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::overpartition::Overpartition;
use crate::{Multiplicity, Part};

/// Shape of the sampled overpartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleParams {
    /// Parts are drawn from `1..=max_part`.
    pub max_part: Part,
    /// Multiplicities are drawn from `[-max_abs_multiplicity, max_abs_multiplicity] \ {0}`.
    pub max_abs_multiplicity: Multiplicity,
    /// At most this many distinct parts.
    pub max_distinct: usize,
}

impl Default for SampleParams {
    fn default() -> Self {
        Self {
            max_part: 40,
            max_abs_multiplicity: 5,
            max_distinct: 8,
        }
    }
}

/// Deterministic stream of overpartitions for a given seed.
pub struct Sampler {
    rng: ChaCha8Rng,
    params: SampleParams,
}

impl Sampler {
    pub fn new(seed: u64, params: SampleParams) -> Self {
        assert!(params.max_part >= 1 && params.max_abs_multiplicity >= 1);
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            params,
        }
    }

    pub fn overpartition(&mut self) -> Overpartition {
        let distinct = self
            .rng
            .random_range(0..=self.params.max_distinct.min(self.params.max_part as usize));
        let mut multiplicities = BTreeMap::new();
        while multiplicities.len() < distinct {
            let part = self.rng.random_range(1..=self.params.max_part);
            let bound = self.params.max_abs_multiplicity;
            let magnitude = self.rng.random_range(1..=bound);
            let mult = if self.rng.random_bool(0.5) { -magnitude } else { magnitude };
            multiplicities.insert(part, mult);
        }
        Overpartition::from_multiplicities(multiplicities).expect("sampled entries are valid")
    }

    /// A random nonempty part set drawn from `1..=max_part`.
    pub fn part_set(&mut self, max_len: usize) -> Vec<Part> {
        let len = self.rng.random_range(1..=max_len.max(1));
        (0..len)
            .map(|_| self.rng.random_range(1..=self.params.max_part))
            .collect()
    }

    pub fn part(&mut self) -> Part {
        self.rng.random_range(1..=self.params.max_part)
    }
}

impl Iterator for Sampler {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        Some(self.overpartition())
    }
}
