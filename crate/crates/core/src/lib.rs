//! Partitions and overpartitions as multiplicative monoid and group.
//!
//! Partitions multiply by concatenation (adding part multiplicities), which
//! makes them a commutative monoid with the empty partition as identity.
//! Allowing negative multiplicities, read as overlined parts, turns this into
//! the abelian group of overpartitions. The supernorm sends part `i` to the
//! `i`-th prime and realizes both structures as `ℤ⁺` and `ℚ⁺` under
//! multiplication.
//!
//! ```
//! use overpart::{supernorm_over, factor_to_overpartition, Overpartition};
//!
//! let a: Overpartition = "<1^2 2^-3 3^1>".parse().unwrap();
//! let b: Overpartition = "<2^3>".parse().unwrap();
//! assert_eq!((&a * &b).to_string(), "<1^2 3^1>");
//!
//! let q = supernorm_over(&a).unwrap();
//! assert_eq!(q.to_string(), "20/27");
//! assert_eq!(factor_to_overpartition(&q).unwrap(), a);
//! ```

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod homs;
pub mod lattice;
pub mod notation;
pub mod overpartition;
pub mod partition;
pub mod primes;
pub mod sample;
pub mod supernorm;
pub mod verify;

/// A part size. Parts are positive.
pub type Part = u32;

/// A signed part multiplicity.
pub type Multiplicity = i64;

/// Bound on the magnitude of any multiplicity. `i64::MIN` is excluded so
/// that every overpartition has a representable inverse.
pub const MAX_MULTIPLICITY: Multiplicity = i64::MAX;

pub use enumerate::{
    count_size_kernel_pairs_bruteforce, count_size_kernel_pairs_formula, overlinings_of,
    overpartitions_of, partition_count, partitions_of, pentagonal, PartitionCountTable,
};
pub use error::{Error, Result};
pub use homs::{
    delete_parts_in, is_member, multiplicity_of, overlength, overlength_mod, overnorm, oversize,
    quotient_image, same_coset, QuotientImage, SubgroupSpec,
};
pub use lattice::{lattice_levels, Lattice, LatticeNode};
pub use notation::{format, parse, parse_literal};
pub use overpartition::{
    from_rational_form, inverse, multiply, to_rational_form, OverlinedPart, Overpartition,
    RationalForm,
};
pub use partition::{multiply_partitions, Partition};
pub use primes::{nth_prime, prime_index, PrimeTable};
pub use supernorm::{
    factor_to_overpartition, factor_to_partition, supernorm, supernorm_over, BigNat, BigRat,
};
