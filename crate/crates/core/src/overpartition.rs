//! Overpartitions as signed multiplicity maps, and the group they form under
//! concatenation.
//!
//! A negative multiplicity marks an overlined part: the overpartition
//! `(3̄, 2, 2, 2, 1, 1)` is stored as `<1^2 2^3 3^-1>`. Multiplying two
//! overpartitions adds multiplicities part by part, so the empty overpartition
//! is the identity and negation of every multiplicity gives the inverse.

use std::collections::BTreeMap;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::{Multiplicity, Part, MAX_MULTIPLICITY};

/// An overpartition: a zero-free map from part to signed multiplicity.
///
/// Multiplicities lie in `[-MAX_MULTIPLICITY, MAX_MULTIPLICITY] \ {0}`, so
/// every element has a representable inverse.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    try_from = "BTreeMap<Part, Multiplicity>",
    into = "BTreeMap<Part, Multiplicity>"
)]
pub struct Overpartition {
    multiplicities: BTreeMap<Part, Multiplicity>,
}

fn check_entry(part: Part, mult: Multiplicity) -> Result<()> {
    if part == 0 {
        return Err(Error::NonPositivePart);
    }
    if mult == 0 {
        return Err(Error::ZeroMultiplicity(part));
    }
    if mult < -MAX_MULTIPLICITY {
        return Err(Error::MultiplicityOverflow(part));
    }
    Ok(())
}

impl Overpartition {
    /// The empty overpartition, identity of the group.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an overpartition from `(part, signed multiplicity)` pairs.
    pub fn from_multiplicities<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Part, Multiplicity)>,
    {
        let mut multiplicities = BTreeMap::new();
        for (part, mult) in pairs {
            check_entry(part, mult)?;
            if multiplicities.insert(part, mult).is_some() {
                return Err(Error::DuplicatePart(part));
            }
        }
        Ok(Self { multiplicities })
    }

    pub(crate) fn from_map_unchecked(multiplicities: BTreeMap<Part, Multiplicity>) -> Self {
        debug_assert!(multiplicities
            .iter()
            .all(|(&p, &m)| check_entry(p, m).is_ok()));
        Self { multiplicities }
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Signed multiplicity of `part`, zero when absent.
    pub fn multiplicity(&self, part: Part) -> Multiplicity {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Part, Multiplicity)> + '_ {
        self.multiplicities.iter().map(|(&p, &m)| (p, m))
    }

    /// Parts with nonzero multiplicity, ascending.
    pub fn support(&self) -> impl Iterator<Item = Part> + '_ {
        self.multiplicities.keys().copied()
    }

    pub fn distinct_parts(&self) -> usize {
        self.multiplicities.len()
    }

    /// True when no part is overlined, i.e. the value lies in the partition monoid.
    pub fn is_partition(&self) -> bool {
        self.multiplicities.values().all(|&m| m > 0)
    }

    /// Sum of parts, counting overlined parts like any other: `Σ i·|μ_i|`.
    pub fn size(&self) -> u128 {
        self.iter()
            .map(|(p, m)| p as u128 * m.unsigned_abs() as u128)
            .sum()
    }

    /// Number of parts, counting overlined parts like any other: `Σ |μ_i|`.
    pub fn length(&self) -> u128 {
        self.iter().map(|(_, m)| m.unsigned_abs() as u128).sum()
    }

    /// Group product, or an error if some multiplicity leaves the representable range.
    pub fn checked_multiply(&self, other: &Overpartition) -> Result<Overpartition> {
        let mut multiplicities = self.multiplicities.clone();
        for (&part, &mult) in &other.multiplicities {
            let current = multiplicities.get(&part).copied().unwrap_or(0);
            let sum = current
                .checked_add(mult)
                .filter(|s| *s >= -MAX_MULTIPLICITY)
                .ok_or(Error::MultiplicityOverflow(part))?;
            if sum == 0 {
                multiplicities.remove(&part);
            } else {
                multiplicities.insert(part, sum);
            }
        }
        Ok(Self { multiplicities })
    }

    /// Group product.
    ///
    /// Panics on multiplicity overflow, like integer arithmetic does; see
    /// [`Overpartition::checked_multiply`].
    pub fn multiply(&self, other: &Overpartition) -> Overpartition {
        self.checked_multiply(other)
            .expect("overpartition multiplicity overflow")
    }

    /// Group inverse: every multiplicity negated.
    pub fn inverse(&self) -> Overpartition {
        Self {
            multiplicities: self.multiplicities.iter().map(|(&p, &m)| (p, -m)).collect(),
        }
    }

    /// Splits into the positive part and the (negated) overlined part.
    pub fn to_rational_form(&self) -> RationalForm {
        let mut numerator = BTreeMap::new();
        let mut denominator = BTreeMap::new();
        for (part, mult) in self.iter() {
            if mult > 0 {
                numerator.insert(part, mult as u64);
            } else {
                denominator.insert(part, mult.unsigned_abs());
            }
        }
        RationalForm {
            numerator: Partition::from_map_unchecked(numerator),
            denominator: Partition::from_map_unchecked(denominator),
        }
    }

    /// Overline-list form: parts in non-increasing order, the first occurrence
    /// of each negative-multiplicity part flagged.
    ///
    /// The list has `length()` entries, so this is only practical for
    /// overpartitions of modest length.
    pub fn to_overline_list(&self) -> Vec<OverlinedPart> {
        let mut out = Vec::new();
        for (value, mult) in self.iter().rev() {
            let count = mult.unsigned_abs() as usize;
            out.push(OverlinedPart {
                value,
                overlined: mult < 0,
            });
            out.extend(std::iter::repeat_n(
                OverlinedPart {
                    value,
                    overlined: false,
                },
                count - 1,
            ));
        }
        out
    }

    /// Parses the overline-list form. Parts must be non-increasing and only the
    /// first occurrence of a part size may carry the overline.
    pub fn from_overline_list(parts: &[OverlinedPart]) -> Result<Overpartition> {
        let mut multiplicities: BTreeMap<Part, Multiplicity> = BTreeMap::new();
        let mut overlined: BTreeMap<Part, bool> = BTreeMap::new();
        let mut previous: Option<Part> = None;
        for item in parts {
            if item.value == 0 {
                return Err(Error::NonPositivePart);
            }
            let first_occurrence = match previous {
                Some(prev) if item.value > prev => return Err(Error::NotDescending(item.value)),
                Some(prev) => item.value < prev,
                None => true,
            };
            if item.overlined && !first_occurrence {
                return Err(Error::MisplacedOverline(item.value));
            }
            if first_occurrence {
                overlined.insert(item.value, item.overlined);
            }
            let slot = multiplicities.entry(item.value).or_insert(0);
            *slot = slot
                .checked_add(1)
                .ok_or(Error::MultiplicityOverflow(item.value))?;
            previous = Some(item.value);
        }
        for (part, mult) in multiplicities.iter_mut() {
            if overlined[part] {
                *mult = -*mult;
            }
        }
        Ok(Self { multiplicities })
    }

    /// Removes every part in `parts`, keeping the rest unchanged.
    pub fn without_parts<F>(&self, mut remove: F) -> Overpartition
    where
        F: FnMut(Part) -> bool,
    {
        Self {
            multiplicities: self
                .multiplicities
                .iter()
                .filter(|(&p, _)| !remove(p))
                .map(|(&p, &m)| (p, m))
                .collect(),
        }
    }
}

/// `multiply` from the free-function API.
pub fn multiply(a: &Overpartition, b: &Overpartition) -> Overpartition {
    a.multiply(b)
}

/// `inverse` from the free-function API.
pub fn inverse(a: &Overpartition) -> Overpartition {
    a.inverse()
}

impl Mul for &Overpartition {
    type Output = Overpartition;

    fn mul(self, rhs: &Overpartition) -> Overpartition {
        self.multiply(rhs)
    }
}

impl Mul for Overpartition {
    type Output = Overpartition;

    fn mul(self, rhs: Overpartition) -> Overpartition {
        self.multiply(&rhs)
    }
}

impl Neg for &Overpartition {
    type Output = Overpartition;

    fn neg(self) -> Overpartition {
        self.inverse()
    }
}

impl From<&Partition> for Overpartition {
    fn from(value: &Partition) -> Self {
        Self {
            multiplicities: value.iter().map(|(p, m)| (p, m as Multiplicity)).collect(),
        }
    }
}

impl From<Partition> for Overpartition {
    fn from(value: Partition) -> Self {
        Overpartition::from(&value)
    }
}

impl TryFrom<BTreeMap<Part, Multiplicity>> for Overpartition {
    type Error = Error;

    fn try_from(multiplicities: BTreeMap<Part, Multiplicity>) -> Result<Self> {
        for (&part, &mult) in &multiplicities {
            check_entry(part, mult)?;
        }
        Ok(Self { multiplicities })
    }
}

impl From<Overpartition> for BTreeMap<Part, Multiplicity> {
    fn from(value: Overpartition) -> Self {
        value.multiplicities
    }
}

impl std::fmt::Debug for Overpartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Overpartition({self})")
    }
}

/// An overpartition written as `numerator / denominator`, two partitions
/// with disjoint part sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalForm {
    numerator: Partition,
    denominator: Partition,
}

impl RationalForm {
    /// Fails with [`Error::OverlappingSupport`] if a part occurs on both sides.
    pub fn new(numerator: Partition, denominator: Partition) -> Result<Self> {
        if let Some(part) = numerator
            .iter()
            .map(|(p, _)| p)
            .find(|&p| denominator.multiplicity(p) > 0)
        {
            return Err(Error::OverlappingSupport(part));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Partition {
        &self.numerator
    }

    pub fn denominator(&self) -> &Partition {
        &self.denominator
    }

    pub fn into_parts(self) -> (Partition, Partition) {
        (self.numerator, self.denominator)
    }

    pub fn to_overpartition(&self) -> Overpartition {
        let mut multiplicities: BTreeMap<Part, Multiplicity> = self
            .numerator
            .iter()
            .map(|(p, m)| (p, m as Multiplicity))
            .collect();
        multiplicities.extend(self.denominator.iter().map(|(p, m)| (p, -(m as Multiplicity))));
        Overpartition::from_map_unchecked(multiplicities)
    }
}

/// `to_rational_form` from the free-function API.
pub fn to_rational_form(a: &Overpartition) -> RationalForm {
    a.to_rational_form()
}

/// `from_rational_form` from the free-function API; checks disjointness.
pub fn from_rational_form(numerator: &Partition, denominator: &Partition) -> Result<Overpartition> {
    RationalForm::new(numerator.clone(), denominator.clone()).map(|r| r.to_overpartition())
}

/// One entry of the overline-list notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OverlinedPart {
    pub value: Part,
    pub overlined: bool,
}

impl OverlinedPart {
    pub fn plain(value: Part) -> Self {
        Self {
            value,
            overlined: false,
        }
    }

    pub fn overlined(value: Part) -> Self {
        Self {
            value,
            overlined: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_cancels_to_zero() {
        assert_eq!(multiply(&op("<1^2 2^-3 3^1>"), &op("<2^3>")), op("<1^2 3^1>"));
        assert_eq!(multiply(&op("<1^-1>"), &op("<1^-1>")), op("<1^-2>"));
        let a = op("<4^7 9^-2>");
        assert_eq!(&a * &Overpartition::empty(), a);
    }

    #[test]
    fn inverse_negates() {
        assert_eq!(inverse(&Overpartition::empty()), Overpartition::empty());
        assert_eq!(inverse(&op("<1^2 3^-1>")), op("<1^-2 3^1>"));
        let a = op("<1^2 3^-1>");
        assert!((&a * &-&a).is_empty());
    }

    #[test]
    fn extreme_multiplicities() {
        assert_eq!(
            Overpartition::from_multiplicities([(1, i64::MIN)]),
            Err(Error::MultiplicityOverflow(1))
        );
        let low = Overpartition::from_multiplicities([(1, -MAX_MULTIPLICITY)]).unwrap();
        assert_eq!(
            low.checked_multiply(&op("<1^-1>")),
            Err(Error::MultiplicityOverflow(1))
        );
        assert_eq!(low.inverse().multiplicity(1), MAX_MULTIPLICITY);
    }

    #[test]
    fn rational_form_splits_by_sign() {
        let r = to_rational_form(&op("<1^2 2^-3 3^1>"));
        assert_eq!(r.numerator().to_string(), "<1^2 3^1>");
        assert_eq!(r.denominator().to_string(), "<2^3>");

        let empty = to_rational_form(&Overpartition::empty());
        assert!(empty.numerator().is_empty() && empty.denominator().is_empty());

        let pure = op("<2^1 5^4>");
        let r = to_rational_form(&pure);
        assert_eq!(Overpartition::from(r.numerator()), pure);
        assert!(r.denominator().is_empty());
    }

    #[test]
    fn from_rational_form_merges_and_checks() {
        let num: Partition = "<1^2 3^1>".parse().unwrap();
        let den: Partition = "<2^3>".parse().unwrap();
        assert_eq!(from_rational_form(&num, &den).unwrap(), op("<1^2 2^-3 3^1>"));
        assert_eq!(
            from_rational_form(&Partition::empty(), &Partition::empty()).unwrap(),
            Overpartition::empty()
        );
        let two: Partition = "<2^1>".parse().unwrap();
        assert_eq!(
            from_rational_form(&two, &two),
            Err(Error::OverlappingSupport(2))
        );
    }

    #[test]
    fn overline_list_decodes_whole_multiplicity() {
        use OverlinedPart as P;
        let a = Overpartition::from_overline_list(&[
            P::overlined(3),
            P::plain(2),
            P::plain(2),
            P::plain(2),
            P::plain(1),
            P::plain(1),
        ])
        .unwrap();
        assert_eq!(a, op("<1^2 2^3 3^-1>"));

        let b = Overpartition::from_overline_list(&[
            P::plain(3),
            P::overlined(2),
            P::plain(2),
            P::plain(2),
            P::plain(1),
            P::plain(1),
        ])
        .unwrap();
        assert_eq!(b, op("<1^2 2^-3 3^1>"));
        assert_eq!(
            Overpartition::from_overline_list(&[]).unwrap(),
            Overpartition::empty()
        );
    }

    #[test]
    fn overline_list_rejects_bad_marks() {
        use OverlinedPart as P;
        assert_eq!(
            Overpartition::from_overline_list(&[P::plain(2), P::overlined(2)]),
            Err(Error::MisplacedOverline(2))
        );
        assert_eq!(
            Overpartition::from_overline_list(&[P::overlined(2), P::overlined(2)]),
            Err(Error::MisplacedOverline(2))
        );
        assert_eq!(
            Overpartition::from_overline_list(&[P::plain(1), P::plain(2)]),
            Err(Error::NotDescending(2))
        );
        assert_eq!(
            Overpartition::from_overline_list(&[P::plain(0)]),
            Err(Error::NonPositivePart)
        );
    }

    #[test]
    fn overline_list_encodes() {
        use OverlinedPart as P;
        assert_eq!(
            op("<1^2 2^3 3^-1>").to_overline_list(),
            vec![
                P::overlined(3),
                P::plain(2),
                P::plain(2),
                P::plain(2),
                P::plain(1),
                P::plain(1)
            ]
        );
        assert!(Overpartition::empty().to_overline_list().is_empty());
    }

    #[test]
    fn json_form_is_a_part_map() {
        let a = op("<1^2 2^-3 3^1>");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"1":2,"2":-3,"3":1}"#);
        assert_eq!(serde_json::from_str::<Overpartition>(&json).unwrap(), a);
        assert!(serde_json::from_str::<Overpartition>(r#"{"2":0}"#).is_err());
        assert!(serde_json::from_str::<Overpartition>(r#"{"0":1}"#).is_err());
    }

    #[test]
    fn size_and_length_count_overlined_parts() {
        let a = op("<1^2 2^-3 3^1>");
        assert_eq!(a.size(), 2 + 6 + 3);
        assert_eq!(a.length(), 6);
        assert!(!a.is_partition());
        assert!(op("<4^1>").is_partition());
    }
}
