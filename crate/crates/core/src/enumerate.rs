//! Exhaustive generators and counting functions.
//!
//! The generators are lazy, so enumerating all partitions of 30 never holds
//! more than one partition at a time. Counting functions use exact
//! arithmetic throughout.

use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::overpartition::Overpartition;
use crate::partition::Partition;
use crate::{Multiplicity, Part};

/// The `j`-th generalized pentagonal number, `j >= 1`: 1, 2, 5, 7, 12, 15, ...
///
/// Odd `j = 2k-1` gives `k(3k-1)/2` and even `j = 2k` gives `k(3k+1)/2`.
/// `pentagonal(0)` is 0, the leading term of the sequence.
pub fn pentagonal(j: u64) -> u64 {
    let k = j.div_ceil(2);
    if j % 2 == 1 {
        k * (3 * k - 1) / 2
    } else {
        k * (3 * k + 1) / 2
    }
}

/// Sign attached to the `j`-th pentagonal shift: `(-1)^⌈j/2⌉`, so `+ - - + + - - ...`.
pub fn pentagonal_sign(j: u64) -> i32 {
    if j.div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Memoized values of the partition function `p(n)`.
///
/// Values come from Euler's recurrence
/// `p(n) = Σ_{j≥1} -(-1)^⌈j/2⌉ p(n - π_j)`. Lookups share a read lock;
/// extending the table takes the write lock.
pub struct PartitionCountTable {
    values: RwLock<Vec<BigUint>>,
}

impl Default for PartitionCountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionCountTable {
    pub fn new() -> Self {
        Self {
            values: RwLock::new(vec![BigUint::one()]),
        }
    }

    pub fn global() -> &'static PartitionCountTable {
        static TABLE: LazyLock<PartitionCountTable> = LazyLock::new(PartitionCountTable::new);
        &TABLE
    }

    /// `p(n)`, zero for negative `n`.
    pub fn get(&self, n: i64) -> BigUint {
        if n < 0 {
            return BigUint::zero();
        }
        let n = n as usize;
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            let m = values.len() as u64;
            let mut sum = BigInt::zero();
            for j in 1.. {
                let shift = pentagonal(j);
                if shift > m {
                    break;
                }
                let term = BigInt::from(values[(m - shift) as usize].clone());
                if pentagonal_sign(j) < 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            values.push(sum.to_biguint().expect("p(n) is nonnegative"));
        }
        values[n].clone()
    }
}

/// `p(n)`, the number of partitions of `n`; zero for negative `n`.
pub fn partition_count(n: i64) -> BigUint {
    PartitionCountTable::global().get(n)
}

/// Lazy stream of the partitions of `n`, in descending lexicographic order of
/// their part lists: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    /// Next partition to yield, parts non-increasing.
    current: Option<Vec<Part>>,
}

impl Partitions {
    fn advance(parts: &mut Vec<Part>) -> bool {
        let Some(i) = parts.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let trailing_ones = (parts.len() - i - 1) as Part;
        let value = parts[i] - 1;
        let mut remaining = trailing_ones + 1;
        parts.truncate(i);
        parts.push(value);
        while remaining >= value {
            parts.push(value);
            remaining -= value;
        }
        if remaining > 0 {
            parts.push(remaining);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let item = Partition::from_parts(parts.iter().copied()).expect("parts are positive");
        if !Self::advance(parts) {
            self.current = None;
        }
        Some(item)
    }
}

impl std::iter::FusedIterator for Partitions {}

/// All `2^d` overpartitions sharing the underlying partition `base`, where `d`
/// is its number of distinct part sizes. The first item is `base` itself;
/// after that, overline patterns follow a binary counter over the distinct
/// parts in ascending order.
pub fn overlinings_of(base: &Partition) -> Overlinings {
    Overlinings {
        entries: base.iter().collect(),
        mask: Some(vec![false; base.distinct_parts()]),
    }
}

/// Iterator returned by [`overlinings_of`].
#[derive(Clone, Debug)]
pub struct Overlinings {
    entries: Vec<(Part, u64)>,
    mask: Option<Vec<bool>>,
}

impl Iterator for Overlinings {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        let mask = self.mask.as_mut()?;
        let item = Overpartition::from_multiplicities(self.entries.iter().zip(mask.iter()).map(
            |(&(part, mult), &overlined)| {
                let mult = mult as Multiplicity;
                (part, if overlined { -mult } else { mult })
            },
        ))
        .expect("entries come from a canonical partition");
        // Binary increment; wrapping back to all-false means we are done.
        let mut carry = true;
        for bit in mask.iter_mut() {
            if !carry {
                break;
            }
            carry = *bit;
            *bit = !*bit;
        }
        if carry {
            self.mask = None;
        }
        Some(item)
    }
}

impl std::iter::FusedIterator for Overlinings {}

/// Lazy stream of the overpartitions of `n`: every partition of `n` from
/// [`partitions_of`], each expanded by [`overlinings_of`].
pub fn overpartitions_of(n: u32) -> impl Iterator<Item = Overpartition> {
    partitions_of(n).flat_map(|p| overlinings_of(&p))
}

/// Coefficients of `∏_{i=1..n_max} (1+q^i)/(1-q^i)` through `q^{n_max}`, the
/// overpartition counts.
pub fn overpartition_counts_by_series(n_max: usize) -> Vec<BigUint> {
    let mut coeffs = vec![BigUint::zero(); n_max + 1];
    coeffs[0] = BigUint::one();
    for i in 1..=n_max {
        // Multiply by (1 + q^i): descending so each term is used once.
        for k in (i..=n_max).rev() {
            let add = coeffs[k - i].clone();
            coeffs[k] += add;
        }
        // Divide by (1 - q^i): ascending to pick up the geometric series.
        for k in i..=n_max {
            let add = coeffs[k - i].clone();
            coeffs[k] += add;
        }
    }
    coeffs
}

/// Number of ordered pairs `(λ, γ)` of partitions of `n` with no part size in
/// common, found by checking every pair. Each pair is the rational form of an
/// element of the size kernel with `|λ| = |γ| = n`.
pub fn count_size_kernel_pairs_bruteforce(n: u32) -> u64 {
    let all: Vec<Partition> = partitions_of(n).collect();
    let mut count = 0;
    for numerator in &all {
        for denominator in &all {
            if numerator.is_disjoint_from(denominator) {
                count += 1;
            }
        }
    }
    count
}

/// `p(n)² + Σ_{j≥1} (-1)^⌈j/2⌉ p(n - π_j)²`, truncated once `π_j > n`.
pub fn count_size_kernel_pairs_formula(n: u32) -> BigInt {
    let n = n as i64;
    let square = |m: i64| {
        let p = BigInt::from(partition_count(m));
        &p * &p
    };
    let mut total = square(n);
    for j in 1.. {
        let shift = pentagonal(j) as i64;
        if shift > n {
            break;
        }
        let term = square(n - shift);
        if pentagonal_sign(j) < 0 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagonal_numbers() {
        let first: Vec<u64> = (1..=8).map(pentagonal).collect();
        assert_eq!(first, vec![1, 2, 5, 7, 12, 15, 22, 26]);
        assert_eq!(pentagonal(0), 0);
        let signs: Vec<i32> = (0..=6).map(pentagonal_sign).collect();
        assert_eq!(signs, vec![1, -1, -1, 1, 1, -1, -1]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(-3), BigUint::zero());
        assert_eq!(partition_count(5), BigUint::from(7u32));
        assert_eq!(partition_count(30), BigUint::from(5604u32));
        assert_eq!(
            partition_count(100),
            "190569292".parse::<BigUint>().unwrap()
        );
    }

    #[test]
    fn partitions_of_four_in_order() {
        let listed: Vec<String> = partitions_of(4).map(|p| p.to_string()).collect();
        assert_eq!(
            listed,
            vec!["<4^1>", "<1^1 3^1>", "<2^2>", "<1^2 2^1>", "<1^4>"]
        );
        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(10).count(), 42);
    }

    #[test]
    fn overlinings() {
        let base = Partition::from_parts([3, 2, 2, 2, 1, 1]).unwrap();
        let all: Vec<Overpartition> = overlinings_of(&base).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Overpartition::from(&base));
        let unique: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(unique.len(), 8);
        assert!(all.iter().all(|a| a.size() == 11 && a.length() == 6));
        assert_eq!(overlinings_of(&Partition::empty()).count(), 1);
    }

    #[test]
    fn overpartition_counts() {
        assert_eq!(overpartitions_of(0).count(), 1);
        assert_eq!(overpartitions_of(4).count(), 14);
        let series = overpartition_counts_by_series(4);
        assert_eq!(series, [1u32, 2, 4, 8, 14].map(BigUint::from).to_vec());
    }

    #[test]
    fn size_kernel_pairs() {
        assert_eq!(count_size_kernel_pairs_bruteforce(0), 1);
        assert_eq!(count_size_kernel_pairs_bruteforce(1), 0);
        assert_eq!(count_size_kernel_pairs_bruteforce(2), 2);
        assert_eq!(count_size_kernel_pairs_formula(0), BigInt::from(1));
        assert_eq!(count_size_kernel_pairs_formula(1), BigInt::from(0));
        assert_eq!(count_size_kernel_pairs_formula(2), BigInt::from(2));
    }
}
