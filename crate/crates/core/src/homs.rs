//! Statistic homomorphisms on the overpartition group, the subgroup families
//! they cut out, and the quotient maps that classify cosets.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::overpartition::Overpartition;
use crate::supernorm::{BigNat, BigRat};
use crate::{Multiplicity, Part};

/// `Σ i·μ_i`, a homomorphism onto `(ℤ, +)`.
pub fn oversize(a: &Overpartition) -> i128 {
    a.iter().map(|(p, m)| p as i128 * m as i128).sum()
}

/// `Σ μ_i`, a homomorphism onto `(ℤ, +)`.
pub fn overlength(a: &Overpartition) -> i128 {
    a.iter().map(|(_, m)| m as i128).sum()
}

/// `∏ i^{μ_i}` in lowest terms.
pub fn overnorm(a: &Overpartition) -> BigRat {
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for (part, mult) in a.iter() {
        let factor = Pow::pow(BigUint::from(part), mult.unsigned_abs());
        if mult > 0 {
            numerator *= factor;
        } else {
            denominator *= factor;
        }
    }
    // Both products are at least 1.
    BigRat::new(
        BigNat::new(numerator).unwrap(),
        BigNat::new(denominator).unwrap(),
    )
}

/// `μ_k(a)`, zero when `k` is absent.
pub fn multiplicity_of(k: Part, a: &Overpartition) -> Multiplicity {
    a.multiplicity(k)
}

/// Removes all parts lying in `set`.
pub fn delete_parts_in(set: &BTreeSet<Part>, a: &Overpartition) -> Overpartition {
    a.without_parts(|p| set.contains(&p))
}

/// Removes all parts satisfying `predicate`; works for infinite part sets such as "all even parts".
pub fn delete_parts_where<F>(predicate: F, a: &Overpartition) -> Overpartition
where
    F: FnMut(Part) -> bool,
{
    a.without_parts(predicate)
}

/// Keeps only the parts lying in `set`.
pub fn keep_parts_in(set: &BTreeSet<Part>, a: &Overpartition) -> Overpartition {
    a.without_parts(|p| !set.contains(&p))
}

/// `overlength(a) mod m`, normalized to `[0, m)`.
///
/// Panics if `m` is zero.
pub fn overlength_mod(m: u64, a: &Overpartition) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    overlength(a).rem_euclid(m as i128) as u64
}

/// One of the subgroup families of the overpartition group.
///
/// Build through [`SubgroupSpec::parts_in`], [`SubgroupSpec::parts_avoiding`]
/// and [`SubgroupSpec::length_mod`] so the parameter invariants hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubgroupJson", into = "SubgroupJson")]
pub enum SubgroupSpec {
    /// Oversize zero: `|λ| = |γ|` in rational form.
    SizeKernel,
    /// Overlength zero: `ℓ(λ) = ℓ(γ)` in rational form.
    LengthKernel,
    /// Every part lies in `S`.
    PartsIn(BTreeSet<Part>),
    /// No part lies in `S`.
    PartsAvoiding(BTreeSet<Part>),
    /// Overlength divisible by `m`.
    LengthMod(u64),
}

impl SubgroupSpec {
    pub fn parts_in<I: IntoIterator<Item = Part>>(set: I) -> Result<Self> {
        Ok(Self::PartsIn(check_set(set)?))
    }

    pub fn parts_avoiding<I: IntoIterator<Item = Part>>(set: I) -> Result<Self> {
        Ok(Self::PartsAvoiding(check_set(set)?))
    }

    pub fn length_mod(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSubgroup("m must be at least 1".into()));
        }
        Ok(Self::LengthMod(m))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::SizeKernel => "size-kernel",
            Self::LengthKernel => "length-kernel",
            Self::PartsIn(_) => "parts-in",
            Self::PartsAvoiding(_) => "parts-avoiding",
            Self::LengthMod(_) => "length-mod",
        }
    }

    /// Builds a spec from a kind name plus the parameters it needs.
    pub fn from_parts(kind: &str, set: Option<Vec<Part>>, m: Option<u64>) -> Result<Self> {
        let need_set = |set: Option<Vec<Part>>| {
            set.ok_or_else(|| Error::InvalidSubgroup(format!("{kind} requires S")))
        };
        match kind {
            "size-kernel" => Ok(Self::SizeKernel),
            "length-kernel" => Ok(Self::LengthKernel),
            "parts-in" => Self::parts_in(need_set(set)?),
            "parts-avoiding" => Self::parts_avoiding(need_set(set)?),
            "length-mod" => Self::length_mod(
                m.ok_or_else(|| Error::InvalidSubgroup("length-mod requires m".into()))?,
            ),
            other => Err(Error::InvalidSubgroup(format!("unknown kind '{other}'"))),
        }
    }
}

fn check_set<I: IntoIterator<Item = Part>>(set: I) -> Result<BTreeSet<Part>> {
    let set: BTreeSet<Part> = set.into_iter().collect();
    if set.is_empty() {
        return Err(Error::InvalidSubgroup("S must be nonempty".into()));
    }
    if set.contains(&0) {
        return Err(Error::InvalidSubgroup("S must contain positive parts".into()));
    }
    Ok(set)
}

/// Wire form: `{"kind": "...", "S": [..], "m": ..}`.
#[derive(Serialize, Deserialize)]
struct SubgroupJson {
    kind: String,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    set: Option<Vec<Part>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
}

impl TryFrom<SubgroupJson> for SubgroupSpec {
    type Error = Error;

    fn try_from(value: SubgroupJson) -> Result<Self> {
        SubgroupSpec::from_parts(&value.kind, value.set, value.m)
    }
}

impl From<SubgroupSpec> for SubgroupJson {
    fn from(value: SubgroupSpec) -> Self {
        let kind = value.kind().to_string();
        match value {
            SubgroupSpec::SizeKernel | SubgroupSpec::LengthKernel => Self {
                kind,
                set: None,
                m: None,
            },
            SubgroupSpec::PartsIn(s) | SubgroupSpec::PartsAvoiding(s) => Self {
                kind,
                set: Some(s.into_iter().collect()),
                m: None,
            },
            SubgroupSpec::LengthMod(m) => Self {
                kind,
                set: None,
                m: Some(m),
            },
        }
    }
}

/// Whether `a` lies in the subgroup `g`.
pub fn is_member(a: &Overpartition, g: &SubgroupSpec) -> bool {
    match g {
        SubgroupSpec::SizeKernel => oversize(a) == 0,
        SubgroupSpec::LengthKernel => overlength(a) == 0,
        SubgroupSpec::PartsIn(s) => a.support().all(|p| s.contains(&p)),
        SubgroupSpec::PartsAvoiding(s) => a.support().all(|p| !s.contains(&p)),
        SubgroupSpec::LengthMod(m) => overlength_mod(*m, a) == 0,
    }
}

/// Membership in "every part satisfies `predicate`", for part sets given by a rule.
pub fn all_parts_satisfy<F>(a: &Overpartition, predicate: F) -> bool
where
    F: FnMut(Part) -> bool,
{
    a.support().all(predicate)
}

/// Whether `a` and `b` lie in the same coset of `g`, i.e. `a·b⁻¹ ∈ g`.
pub fn same_coset(a: &Overpartition, b: &Overpartition, g: &SubgroupSpec) -> bool {
    is_member(&a.multiply(&b.inverse()), g)
}

/// Value of the homomorphism whose kernel is a given subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum QuotientImage {
    Integer { value: i128 },
    Residue { value: u64, modulus: u64 },
    Overpartition { value: Overpartition },
}

impl fmt::Display for QuotientImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer { value } => write!(f, "{value}"),
            Self::Residue { value, .. } => write!(f, "{value}"),
            Self::Overpartition { value } => write!(f, "{value}"),
        }
    }
}

/// Image of `a` under the classifying homomorphism for `g`:
///
/// - size kernel: oversize, in `ℤ`
/// - length kernel: overlength, in `ℤ`
/// - parts in `S`: delete the parts in `S`, landing in the parts-avoiding-`S` subgroup
/// - parts avoiding `S`: keep only the parts in `S`, landing in the parts-in-`S` subgroup
/// - length mod `m`: overlength residue in `ℤ/mℤ`
///
/// Two elements share a coset exactly when their images agree.
pub fn quotient_image(a: &Overpartition, g: &SubgroupSpec) -> QuotientImage {
    match g {
        SubgroupSpec::SizeKernel => QuotientImage::Integer { value: oversize(a) },
        SubgroupSpec::LengthKernel => QuotientImage::Integer {
            value: overlength(a),
        },
        SubgroupSpec::PartsIn(s) => QuotientImage::Overpartition {
            value: delete_parts_in(s, a),
        },
        SubgroupSpec::PartsAvoiding(s) => QuotientImage::Overpartition {
            value: keep_parts_in(s, a),
        },
        SubgroupSpec::LengthMod(m) => QuotientImage::Residue {
            value: overlength_mod(*m, a),
            modulus: *m,
        },
    }
}

/// A canonical element of the coset with the given image: `<1^k>` for the
/// integer and residue classes, the image itself for the parts families.
///
/// Fails if the image does not belong to `g`'s quotient or `k` is out of
/// multiplicity range.
pub fn coset_representative(image: &QuotientImage, g: &SubgroupSpec) -> Result<Overpartition> {
    let ones = |k: i128| -> Result<Overpartition> {
        if k == 0 {
            return Ok(Overpartition::empty());
        }
        let k = Multiplicity::try_from(k).map_err(|_| Error::MultiplicityOverflow(1))?;
        Overpartition::from_multiplicities([(1, k)])
    };
    match (g, image) {
        (SubgroupSpec::SizeKernel | SubgroupSpec::LengthKernel, QuotientImage::Integer { value }) => {
            ones(*value)
        }
        (SubgroupSpec::LengthMod(m), QuotientImage::Residue { value, modulus })
            if m == modulus && value < m =>
        {
            ones(*value as i128)
        }
        (SubgroupSpec::PartsIn(s), QuotientImage::Overpartition { value })
            if value.support().all(|p| !s.contains(&p)) =>
        {
            Ok(value.clone())
        }
        (SubgroupSpec::PartsAvoiding(s), QuotientImage::Overpartition { value })
            if value.support().all(|p| s.contains(&p)) =>
        {
            Ok(value.clone())
        }
        _ => Err(Error::InvalidSubgroup(format!(
            "{image} is not in the quotient by {}",
            g.kind()
        ))),
    }
}
