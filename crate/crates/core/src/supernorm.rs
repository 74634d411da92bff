//! The supernorm isomorphisms: partitions onto the positive integers and
//! overpartitions onto the positive rationals, with inverses by factoring.
//!
//! Part `i` with multiplicity `m` contributes the factor `p_i^m`, where `p_i`
//! is the `i`-th prime. Unique factorization makes both maps bijective, and
//! since multiplication of (over)partitions adds multiplicities, the maps turn
//! concatenation into ordinary multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::overpartition::Overpartition;
use crate::partition::Partition;
use crate::primes::{PrimeTable, PRIME_LIMIT};
use crate::{Multiplicity, Part};

/// A positive arbitrary-precision integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BigNat(BigUint);

impl BigNat {
    pub fn one() -> Self {
        Self(BigUint::one())
    }

    /// `None` for zero.
    pub fn new(value: BigUint) -> Option<Self> {
        (!value.is_zero()).then_some(Self(value))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn divides(&self, other: &BigNat) -> bool {
        (&other.0 % &self.0).is_zero()
    }
}

impl From<u64> for BigNat {
    /// Panics on zero.
    fn from(value: u64) -> Self {
        assert!(value > 0, "BigNat must be positive");
        Self(BigUint::from(value))
    }
}

impl Mul for &BigNat {
    type Output = BigNat;

    fn mul(self, rhs: &BigNat) -> BigNat {
        BigNat(&self.0 * &rhs.0)
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidRational(format!("'{s}' is not a decimal integer")));
        }
        let value: BigUint = s
            .parse()
            .map_err(|_| Error::InvalidRational(format!("'{s}' is not a decimal integer")))?;
        BigNat::new(value).ok_or_else(|| Error::InvalidRational("zero is not positive".into()))
    }
}

impl TryFrom<String> for BigNat {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<BigNat> for String {
    fn from(value: BigNat) -> Self {
        value.to_string()
    }
}

/// A positive rational in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BigRat {
    numerator: BigUint,
    denominator: BigUint,
}

impl BigRat {
    pub fn one() -> Self {
        Self::from_integer(BigNat::one())
    }

    /// Reduces to lowest terms.
    pub fn new(numerator: BigNat, denominator: BigNat) -> Self {
        let (n, d) = (numerator.0, denominator.0);
        let g = n.gcd(&d);
        Self {
            numerator: n / &g,
            denominator: d / g,
        }
    }

    pub fn from_integer(n: BigNat) -> Self {
        Self {
            numerator: n.0,
            denominator: BigUint::one(),
        }
    }

    pub fn numerator(&self) -> BigNat {
        BigNat(self.numerator.clone())
    }

    pub fn denominator(&self) -> BigNat {
        BigNat(self.denominator.clone())
    }

    pub fn is_integer(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn recip(&self) -> BigRat {
        Self {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }
}

impl Mul for &BigRat {
    type Output = BigRat;

    fn mul(self, rhs: &BigRat) -> BigRat {
        // Cross-cancel so the operands stay small and the result is reduced.
        let g1 = self.numerator.gcd(&rhs.denominator);
        let g2 = rhs.numerator.gcd(&self.denominator);
        BigRat {
            numerator: (&self.numerator / &g1) * (&rhs.numerator / &g2),
            denominator: (&self.denominator / &g2) * (&rhs.denominator / &g1),
        }
    }
}

impl Mul for BigRat {
    type Output = BigRat;

    fn mul(self, rhs: BigRat) -> BigRat {
        &self * &rhs
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl FromStr for BigRat {
    type Err = Error;

    /// Accepts `num/den` or `num`, both positive decimal integers. The value is
    /// reduced, so `4/6` parses to `2/3`.
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let parse = |text: &str| -> Result<BigNat> {
            text.parse().map_err(|_| {
                Error::InvalidRational(format!("'{s}' is not a positive rational num/den"))
            })
        };
        Ok(BigRat::new(parse(num)?, parse(den)?))
    }
}

impl TryFrom<String> for BigRat {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<BigRat> for String {
    fn from(value: BigRat) -> Self {
        value.to_string()
    }
}

fn prime_power(part: Part, exponent: u64) -> Result<BigUint> {
    let p = PrimeTable::global().nth(part as usize)?;
    Ok(num_traits::pow(BigUint::from(p), exponent as usize))
}

/// `∏ p_i^{m_i}` over the parts of `a`; the empty partition maps to 1.
pub fn supernorm(a: &Partition) -> Result<BigNat> {
    let mut value = BigUint::one();
    for (part, mult) in a.iter() {
        value *= prime_power(part, mult)?;
    }
    Ok(BigNat(value))
}

/// `∏ p_i^{μ_i}` as a reduced positive rational. Numerator and denominator
/// are the supernorms of the two halves of the rational form; their supports
/// are disjoint, so the quotient is already in lowest terms.
pub fn supernorm_over(a: &Overpartition) -> Result<BigRat> {
    let (numerator, denominator) = a.to_rational_form().into_parts();
    Ok(BigRat::new(supernorm(&numerator)?, supernorm(&denominator)?))
}

/// Exponent of each prime in `n`, keyed by prime index.
fn factor_by_index(n: &BigUint) -> Result<BTreeMap<Part, u64>> {
    let mut remaining = n.clone();
    let mut exponents = BTreeMap::new();
    let mut failure = None;
    let table = PrimeTable::global();
    let completed = table.for_each_while(|index, p| {
        if remaining.is_one() {
            return false;
        }
        let p_big = BigUint::from(p);
        if &p_big * &p_big > remaining {
            return false;
        }
        let mut count = 0u64;
        loop {
            let (q, r) = remaining.div_rem(&p_big);
            if !r.is_zero() {
                break;
            }
            remaining = q;
            count += 1;
        }
        if count > 0 {
            match Part::try_from(index) {
                Ok(part) => {
                    exponents.insert(part, count);
                }
                Err(_) => {
                    failure = Some(Error::PrimeLimit(format!("prime index {index} exceeds part range")));
                    return false;
                }
            }
        }
        true
    });
    if let Some(err) = failure {
        return Err(err);
    }
    if !completed {
        return Err(Error::PrimeLimit(format!(
            "{n} has a prime factor above {PRIME_LIMIT}"
        )));
    }
    if !remaining.is_one() {
        // No factor up to its square root, so the cofactor is prime.
        let p = remaining
            .to_u64()
            .filter(|&p| p <= PRIME_LIMIT)
            .ok_or_else(|| Error::PrimeLimit(format!("{n} has a prime factor above {PRIME_LIMIT}")))?;
        let index = table.index_of(p)?;
        let part = Part::try_from(index)
            .map_err(|_| Error::PrimeLimit(format!("prime index {index} exceeds part range")))?;
        *exponents.entry(part).or_insert(0) += 1;
    }
    Ok(exponents)
}

/// Inverse of [`supernorm`]: the exponent of `p_i` becomes the multiplicity of part `i`.
pub fn factor_to_partition(n: &BigNat) -> Result<Partition> {
    Ok(Partition::from_map_unchecked(factor_by_index(&n.0)?))
}

/// Inverse of [`supernorm_over`]: numerator primes give plain parts,
/// denominator primes give overlined parts.
pub fn factor_to_overpartition(q: &BigRat) -> Result<Overpartition> {
    let mut multiplicities: BTreeMap<Part, Multiplicity> = factor_by_index(&q.numerator)?
        .into_iter()
        .map(|(p, m)| (p, m as Multiplicity))
        .collect();
    for (part, mult) in factor_by_index(&q.denominator)? {
        multiplicities.insert(part, -(mult as Multiplicity));
    }
    Ok(Overpartition::from_map_unchecked(multiplicities))
}
