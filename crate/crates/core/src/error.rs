use alloc::string::String;
use core::fmt;

use crate::lie::{Family, Letter};

/// Errors reported by the crystal operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The `(family, n)` combination has no construction.
    UnsupportedType { family: Family, n: usize, reason: &'static str },
    /// A letter code that is not part of the alphabet.
    IllegalLetter { letter: Letter, family: Family, n: usize },
    /// An index outside `1..=rank`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A weight vector of the wrong length.
    WeightLength { expected: usize, found: usize },
    /// A weight outside the restricted dominant cone.
    NotHatDominant { reason: String },
    /// A tableau whose rows do not form a Young diagram of the right size.
    MalformedTableau { reason: String },
    /// A tableau that is not large where largeness is required.
    NotLarge { row: usize },
    /// A tableau that is not a valid `B(∞)` representative.
    InvalidRepresentative { reason: String },
    /// A target shape too small to hold a related large tableau.
    ShapeTooSmall { row: usize },
    /// Two tableaux that cannot be compared.
    Mismatch { reason: String },
    /// A tuple element that violates the inequality chains.
    InvalidCliff { reason: String },
    /// The requested model does not exist for this family.
    Unsupported { reason: &'static str },
    /// An internal invariant failed; indicates a bug.
    Internal { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType { family, n, reason } => {
                write!(f, "unsupported type {family}{n}: {reason}")
            }
            Error::IllegalLetter { letter, family, n } => {
                write!(f, "letter {letter} is not in the alphabet of {family}{n}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "index {index} outside 1..={rank}")
            }
            Error::WeightLength { expected, found } => {
                write!(f, "weight has {found} coordinates, expected {expected}")
            }
            Error::NotHatDominant { reason } => write!(f, "weight not admissible: {reason}"),
            Error::MalformedTableau { reason } => write!(f, "malformed tableau: {reason}"),
            Error::NotLarge { row } => write!(f, "tableau is not large at row {row}"),
            Error::InvalidRepresentative { reason } => {
                write!(f, "not a marginally large representative: {reason}")
            }
            Error::ShapeTooSmall { row } => {
                write!(f, "target shape too small: row {row} would not stay large")
            }
            Error::Mismatch { reason } => write!(f, "incompatible tableaux: {reason}"),
            Error::InvalidCliff { reason } => write!(f, "invalid tuple element: {reason}"),
            Error::Unsupported { reason } => write!(f, "unsupported: {reason}"),
            Error::Internal { reason } => write!(f, "internal invariant violated: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
