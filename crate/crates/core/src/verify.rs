//! Self-contained identity checks: each pairs a closed-form or recurrence
//! value with an exhaustive count.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::enumerate::{
    count_size_kernel_pairs_bruteforce, count_size_kernel_pairs_formula,
    overpartition_counts_by_series, overpartitions_of, partition_count, partitions_of,
};
use crate::sample::{SampleParams, Sampler};

/// Largest `n` each identity accepts; the brute-force side grows quickly.
pub const MAX_CORTEEL_N: u32 = 40;
pub const MAX_PN_N: u32 = 60;
pub const MAX_OVERCOUNT_N: u32 = 30;
pub const MAX_AXIOM_SAMPLES: u32 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Pentagonal sum of squared partition counts against ordered disjoint pairs.
    Corteel,
    /// Euler recurrence for `p(n)` against enumeration.
    Pn,
    /// Truncated product series against the overpartition stream.
    Overcount,
    /// Sampled group axioms; `n` is the number of samples.
    Axioms,
}

impl Identity {
    pub fn limit(self) -> u32 {
        match self {
            Identity::Corteel => MAX_CORTEEL_N,
            Identity::Pn => MAX_PN_N,
            Identity::Overcount => MAX_OVERCOUNT_N,
            Identity::Axioms => MAX_AXIOM_SAMPLES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: u32,
    pub formula: String,
    pub oracle: String,
    pub matches: bool,
}

fn row(n: u32, formula: impl ToString, oracle: impl ToString) -> Row {
    let (formula, oracle) = (formula.to_string(), oracle.to_string());
    Row {
        n,
        matches: formula == oracle,
        formula,
        oracle,
    }
}

pub fn corteel_rows(n_max: u32) -> Vec<Row> {
    (0..=n_max)
        .map(|n| {
            row(
                n,
                count_size_kernel_pairs_formula(n),
                BigInt::from(count_size_kernel_pairs_bruteforce(n)),
            )
        })
        .collect()
}

pub fn pn_rows(n_max: u32) -> Vec<Row> {
    (0..=n_max)
        .map(|n| row(n, partition_count(n as i64), partitions_of(n).count()))
        .collect()
}

pub fn overcount_rows(n_max: u32) -> Vec<Row> {
    let series = overpartition_counts_by_series(n_max as usize);
    (0..=n_max)
        .map(|n| row(n, &series[n as usize], BigUint::from(overpartitions_of(n).count())))
        .collect()
}

/// Checks associativity, commutativity, identity and inverse on `samples`
/// seeded triples. One row per law: `formula` is the number of samples,
/// `oracle` the number that held.
pub fn axiom_rows(samples: u32, seed: u64) -> Vec<Row> {
    let mut sampler = Sampler::new(seed, SampleParams::default());
    let empty = crate::Overpartition::empty();
    let mut held = [0u32; 4];
    for _ in 0..samples {
        let (a, b, c) = (sampler.overpartition(), sampler.overpartition(), sampler.overpartition());
        let laws = [
            (&a * &b) * c.clone() == &a * &(&b * &c),
            &a * &b == &b * &a,
            &a * &empty == a && &empty * &a == a,
            (&a * &a.inverse()).is_empty(),
        ];
        for (count, ok) in held.iter_mut().zip(laws) {
            *count += u32::from(ok);
        }
    }
    held.iter()
        .enumerate()
        .map(|(law, &ok)| row(law as u32, samples, ok))
        .collect()
}

/// Names for the rows of [`axiom_rows`], by index.
pub const AXIOM_NAMES: [&str; 4] = ["associativity", "commutativity", "identity", "inverse"];

pub fn rows(identity: Identity, n: u32, seed: u64) -> Vec<Row> {
    match identity {
        Identity::Corteel => corteel_rows(n),
        Identity::Pn => pn_rows(n),
        Identity::Overcount => overcount_rows(n),
        Identity::Axioms => axiom_rows(n, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_match() {
        for identity in [Identity::Corteel, Identity::Pn, Identity::Overcount] {
            let rows = rows(identity, 8, 0);
            assert_eq!(rows.len(), 9);
            assert!(rows.iter().all(|r| r.matches), "{identity:?}");
        }
        let axioms = rows(Identity::Axioms, 50, 3);
        assert_eq!(axioms.len(), 4);
        assert!(axioms.iter().all(|r| r.matches && r.formula == "50"));
    }

    #[test]
    fn corteel_first_row() {
        assert_eq!(corteel_rows(0), vec![row(0, 1, 1)]);
    }
}
