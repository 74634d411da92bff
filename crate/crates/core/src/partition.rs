//! Ordinary integer partitions in part-multiplicity form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::overpartition::Overpartition;
use crate::{Part, MAX_MULTIPLICITY};

/// An integer partition stored as a zero-free map from part to multiplicity.
///
/// The map is ordered by part, so iteration is ascending and two partitions are
/// equal exactly when their maps are equal. Multiplicities never exceed
/// [`MAX_MULTIPLICITY`], which keeps every partition embeddable in the
/// overpartition group.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    multiplicities: BTreeMap<Part, u64>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from `(part, multiplicity)` pairs.
    ///
    /// Pairs with multiplicity zero are rejected rather than dropped, and a part
    /// may be listed only once.
    pub fn from_multiplicities<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Part, u64)>,
    {
        let mut multiplicities = BTreeMap::new();
        for (part, mult) in pairs {
            if part == 0 {
                return Err(Error::NonPositivePart);
            }
            if mult == 0 {
                return Err(Error::ZeroMultiplicity(part));
            }
            if mult > MAX_MULTIPLICITY as u64 {
                return Err(Error::MultiplicityOverflow(part));
            }
            if multiplicities.insert(part, mult).is_some() {
                return Err(Error::DuplicatePart(part));
            }
        }
        Ok(Self { multiplicities })
    }

    /// Builds a partition from a list of parts in any order, e.g. `[7, 5, 5, 2, 2, 2, 1]`.
    pub fn from_parts<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = Part>,
    {
        let mut multiplicities: BTreeMap<Part, u64> = BTreeMap::new();
        for part in parts {
            if part == 0 {
                return Err(Error::NonPositivePart);
            }
            *multiplicities.entry(part).or_insert(0) += 1;
        }
        Ok(Self { multiplicities })
    }

    pub(crate) fn from_map_unchecked(multiplicities: BTreeMap<Part, u64>) -> Self {
        debug_assert!(multiplicities
            .iter()
            .all(|(&p, &m)| p > 0 && m > 0 && m <= MAX_MULTIPLICITY as u64));
        Self { multiplicities }
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Multiplicity of `part`, zero when absent.
    pub fn multiplicity(&self, part: Part) -> u64 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn iter(&self) -> impl Iterator<Item = (Part, u64)> + '_ {
        self.multiplicities.iter().map(|(&p, &m)| (p, m))
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn largest_part(&self) -> Option<Part> {
        self.multiplicities.keys().next_back().copied()
    }

    /// Sum of parts.
    pub fn size(&self) -> u128 {
        self.iter().map(|(p, m)| p as u128 * m as u128).sum()
    }

    /// Number of parts, counted with multiplicity.
    pub fn length(&self) -> u128 {
        self.iter().map(|(_, m)| m as u128).sum()
    }

    /// Parts in standard non-increasing order.
    pub fn parts_descending(&self) -> Vec<Part> {
        let mut out = Vec::new();
        for (&part, &mult) in self.multiplicities.iter().rev() {
            out.extend(std::iter::repeat_n(part, mult as usize));
        }
        out
    }

    /// Multiset inclusion: every part of `self` occurs in `other` at least as often.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.iter().all(|(p, m)| other.multiplicity(p) >= m)
    }

    /// True when no part size occurs in both partitions.
    pub fn is_disjoint_from(&self, other: &Partition) -> bool {
        let (small, large) = if self.distinct_parts() <= other.distinct_parts() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .multiplicities
            .keys()
            .all(|p| !large.multiplicities.contains_key(p))
    }

    /// Concatenation product: multiplicities add part by part.
    pub fn checked_multiply(&self, other: &Partition) -> Result<Partition> {
        let mut multiplicities = self.multiplicities.clone();
        for (&part, &mult) in &other.multiplicities {
            let slot = multiplicities.entry(part).or_insert(0);
            *slot = slot
                .checked_add(mult)
                .filter(|&m| m <= MAX_MULTIPLICITY as u64)
                .ok_or(Error::MultiplicityOverflow(part))?;
        }
        Ok(Self { multiplicities })
    }

    /// Concatenation product.
    ///
    /// Panics if a resulting multiplicity exceeds [`MAX_MULTIPLICITY`]; use
    /// [`Partition::checked_multiply`] to handle that case.
    pub fn multiply(&self, other: &Partition) -> Partition {
        self.checked_multiply(other)
            .expect("partition multiplicity overflow")
    }

    /// The same multiset viewed as an overpartition with no overlined parts.
    pub fn to_overpartition(&self) -> Overpartition {
        Overpartition::from(self)
    }
}

/// `multiply_partitions` from the free-function API.
pub fn multiply_partitions(a: &Partition, b: &Partition) -> Partition {
    a.multiply(b)
}

impl Mul for &Partition {
    type Output = Partition;

    fn mul(self, rhs: &Partition) -> Partition {
        self.multiply(rhs)
    }
}

impl Mul for Partition {
    type Output = Partition;

    fn mul(self, rhs: Partition) -> Partition {
        self.multiply(&rhs)
    }
}

impl TryFrom<&Overpartition> for Partition {
    type Error = Error;

    fn try_from(value: &Overpartition) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        for (part, mult) in value.iter() {
            if mult < 0 {
                return Err(Error::NegativeMultiplicity(part));
            }
            multiplicities.insert(part, mult as u64);
        }
        Ok(Self { multiplicities })
    }
}

impl TryFrom<Overpartition> for Partition {
    type Error = Error;

    fn try_from(value: Overpartition) -> Result<Self> {
        Partition::try_from(&value)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_overpartition(), f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::try_from(s.parse::<Overpartition>()?)
    }
}
