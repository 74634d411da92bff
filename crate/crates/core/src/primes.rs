//! A growable table of primes, extended by segmented sieving.

use std::sync::{LazyLock, RwLock};

use crate::error::{Error, Result};

/// Largest prime the table will ever hold. Sieving this far costs roughly
/// 32 MiB for the table and under a second of CPU.
pub const PRIME_LIMIT: u64 = 1 << 26;

const INITIAL_BOUND: u64 = 1 << 12;

/// Ascending list of primes `p_1 = 2, p_2 = 3, ...`, extended on demand.
///
/// Readers share a read lock; growth takes the write lock, sieves the next
/// segment, and publishes it before releasing. Indices are 1-based.
pub struct PrimeTable {
    inner: RwLock<Sieved>,
}

struct Sieved {
    primes: Vec<u64>,
    /// Every prime below `bound` is in `primes`.
    bound: u64,
}

impl Sieved {
    fn initial() -> Self {
        let n = INITIAL_BOUND as usize;
        let mut composite = vec![false; n];
        let mut primes = Vec::new();
        for i in 2..n {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        Self {
            primes,
            bound: INITIAL_BOUND,
        }
    }

    /// Sieves `[bound, min(2*bound, PRIME_LIMIT + 1))`. Every prime up to the
    /// square root of the new bound is already known because `bound >= 2`.
    fn grow(&mut self) -> bool {
        let low = self.bound;
        if low > PRIME_LIMIT {
            return false;
        }
        let high = (low * 2).min(PRIME_LIMIT + 1);
        let mut composite = vec![false; (high - low) as usize];
        for &p in &self.primes {
            if p * p >= high {
                break;
            }
            let mut multiple = low.div_ceil(p) * p;
            while multiple < high {
                composite[(multiple - low) as usize] = true;
                multiple += p;
            }
        }
        self.primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(offset, _)| low + offset as u64),
        );
        self.bound = high;
        true
    }
}

impl Default for PrimeTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeTable {
    pub fn new() -> Self {
        Self {
            inner: RwLock::new(Sieved::initial()),
        }
    }

    /// The process-wide table used by the free functions.
    pub fn global() -> &'static PrimeTable {
        static TABLE: LazyLock<PrimeTable> = LazyLock::new(PrimeTable::new);
        &TABLE
    }

    /// Number of primes currently sieved.
    pub fn len(&self) -> usize {
        self.inner.read().unwrap().primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grows until `done` holds or the limit is reached.
    fn grow_until<F>(&self, done: F) -> bool
    where
        F: Fn(&Sieved) -> bool,
    {
        if done(&self.inner.read().unwrap()) {
            return true;
        }
        let mut table = self.inner.write().unwrap();
        while !done(&table) {
            if !table.grow() {
                return false;
            }
        }
        true
    }

    /// The `index`-th prime, 1-based.
    pub fn nth(&self, index: usize) -> Result<u64> {
        if index == 0 {
            return Err(Error::PrimeLimit("prime indices start at 1".into()));
        }
        if !self.grow_until(|t| t.primes.len() >= index) {
            return Err(Error::PrimeLimit(format!(
                "prime number {index} exceeds the table limit {PRIME_LIMIT}"
            )));
        }
        Ok(self.inner.read().unwrap().primes[index - 1])
    }

    /// The 1-based index of prime `p`.
    pub fn index_of(&self, p: u64) -> Result<usize> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        if p > PRIME_LIMIT {
            return Err(Error::PrimeLimit(format!(
                "{p} exceeds the table limit {PRIME_LIMIT}"
            )));
        }
        self.grow_until(|t| t.bound > p);
        let table = self.inner.read().unwrap();
        table
            .primes
            .binary_search(&p)
            .map(|i| i + 1)
            .map_err(|_| Error::NotPrime(p))
    }

    /// Runs `f` over the primes in ascending order with their 1-based index,
    /// growing the table as needed, until `f` returns `false` or the table
    /// limit is exhausted. Returns `false` only in the second case.
    pub fn for_each_while<F>(&self, mut f: F) -> bool
    where
        F: FnMut(usize, u64) -> bool,
    {
        let mut index = 0;
        loop {
            {
                let table = self.inner.read().unwrap();
                while index < table.primes.len() {
                    if !f(index + 1, table.primes[index]) {
                        return true;
                    }
                    index += 1;
                }
            }
            let target = index + 1;
            if !self.grow_until(|t| t.primes.len() >= target) {
                return false;
            }
        }
    }
}

/// The `index`-th prime (`nth_prime(1) == 2`).
pub fn nth_prime(index: usize) -> Result<u64> {
    PrimeTable::global().nth(index)
}

/// Inverse of [`nth_prime`]: `prime_index(541) == 100`. Composites give [`Error::NotPrime`].
pub fn prime_index(p: u64) -> Result<usize> {
    PrimeTable::global().index_of(p)
}
