use thiserror::Error;

use crate::Part;

/// Errors raised while constructing, parsing, or transforming partition values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("part {0} appears more than once")]
    DuplicatePart(Part),

    #[error("part {0} has zero multiplicity")]
    ZeroMultiplicity(Part),

    #[error("parts must be positive integers")]
    NonPositivePart,

    #[error("multiplicity of part {0} is out of range")]
    MultiplicityOverflow(Part),

    #[error("part {0} appears in both numerator and denominator")]
    OverlappingSupport(Part),

    #[error("part {0} has negative multiplicity and cannot be a partition")]
    NegativeMultiplicity(Part),

    #[error("overline on part {0} is not on its first occurrence")]
    MisplacedOverline(Part),

    #[error("overline list is not in descending order at part {0}")]
    NotDescending(Part),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime table limit exceeded: {0}")]
    PrimeLimit(String),

    #[error("invalid rational: {0}")]
    InvalidRational(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
