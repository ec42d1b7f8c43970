use std::fmt;

use num_bigint::BigInt;

use crate::catalog::Basis;
use crate::realization::Sign;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts were not weakly decreasing or contained a zero.
    InvalidPartition(String),
    /// Two partitions of different weight were compared or tested for
    /// refinement; they live in different index sets.
    WeightMismatch { left: u32, right: u32 },
    /// A splitting shape does not sum to the weight of the partition.
    ShapeWeightMismatch { partition: u32, shape: u32 },
    /// A splitting shape contained a zero entry.
    ZeroShapeEntry,
    /// The empty partition has no `s` polynomial; callers treat it as the
    /// constant 1.
    EmptyPartition,
    /// Fewer variables than the degree of the symmetric function.
    TooFewVariables { needed: usize, got: usize },
    /// An evaluation point with fewer coordinates than the polynomial has
    /// variables.
    SigmaTooShort { needed: usize, got: usize },
    NonSquareMatrix,
    SingularMatrix,
    /// The determinant is not a unit, so no integer inverse exists.
    NotUnimodular { det: BigInt },
    /// Entry count does not match the number of partitions of the dimension.
    WrongEntryCount { dim: u32, expected: usize, got: usize },
    BasisMismatch { expected: Basis, got: Basis },
    DimensionMismatch { left: u32, right: u32 },
    /// Divisibility rules exist only in dimensions 1, 2 and 3.
    NoDivisibilityRule { dim: u32 },
    /// A generator family does not cover the requested dimension.
    FamilyTooSmall { needed: u32, max: u32 },
    /// A generator base violates the top-entry contract (+1 for the plus
    /// generator, -1 for the minus generator).
    GeneratorContract { dim: u32, sign: Sign, found: BigInt },
    MalformedFamily(String),
    /// A recipe item with a non-positive multiplicity.
    InvalidMultiplicity,
    /// Recomputing a recipe did not reproduce its recorded vector.
    RecipeMismatch,
    /// The family passed to verification differs from the one the recipe
    /// records.
    FamilyHashMismatch { recorded: String, given: String },
    MissingStratumValue { label: String },
    DuplicateStratumLabel { label: String },
    UnknownStratum { label: String },
    /// Refined pieces must carry the same total compactly-supported Euler
    /// characteristic as the stratum they replace.
    ChiSumMismatch { label: String, expected: i64, actual: i64 },
    /// A JSON payload failed to parse or violated a schema invariant.
    Json(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::WeightMismatch { left, right } => {
                write!(f, "partitions of different weights {left} and {right} are incomparable")
            }
            Error::ShapeWeightMismatch { partition, shape } => {
                write!(f, "partition weight {partition} does not match shape total {shape}")
            }
            Error::ZeroShapeEntry => write!(f, "splitting shapes must consist of positive integers"),
            Error::EmptyPartition => {
                write!(f, "the empty partition has no s polynomial (its value is the constant 1)")
            }
            Error::TooFewVariables { needed, got } => {
                write!(f, "need at least {needed} variables, got {got}")
            }
            Error::SigmaTooShort { needed, got } => {
                write!(f, "evaluation point has {got} coordinates, polynomial needs {needed}")
            }
            Error::NonSquareMatrix => write!(f, "matrix is not square"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotUnimodular { det } => {
                write!(f, "not unimodular: determinant is {det}, expected +1 or -1")
            }
            Error::WrongEntryCount { dim, expected, got } => {
                write!(f, "vector in dimension {dim} needs {expected} entries, got {got}")
            }
            Error::BasisMismatch { expected, got } => {
                write!(f, "expected a vector in the {expected} basis, got {got}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NoDivisibilityRule { dim } => {
                write!(f, "no divisibility rule in dimension {dim} (rules exist for 1, 2, 3)")
            }
            Error::FamilyTooSmall { needed, max } => {
                write!(f, "generator family covers dimensions up to {max}, need {needed}")
            }
            Error::GeneratorContract { dim, sign, found } => {
                let expected = match sign {
                    Sign::Plus => "+1",
                    Sign::Minus => "-1",
                };
                write!(
                    f,
                    "generator contract violated at dimension {dim}: top entry of the {sign} base must be {expected}, found {found}"
                )
            }
            Error::MalformedFamily(msg) => write!(f, "malformed generator family: {msg}"),
            Error::InvalidMultiplicity => {
                write!(f, "recipe items must carry positive multiplicities")
            }
            Error::RecipeMismatch => {
                write!(f, "recomputed recipe does not match its recorded vector")
            }
            Error::FamilyHashMismatch { recorded, given } => {
                write!(f, "recipe was produced with family {recorded}, given family hashes to {given}")
            }
            Error::MissingStratumValue { label } => {
                write!(f, "constructible function has no value on stratum '{label}'")
            }
            Error::DuplicateStratumLabel { label } => {
                write!(f, "duplicate stratum label '{label}'")
            }
            Error::UnknownStratum { label } => write!(f, "unknown stratum '{label}'"),
            Error::ChiSumMismatch { label, expected, actual } => {
                write!(
                    f,
                    "refinement of '{label}' must preserve chi_c: pieces sum to {actual}, stratum has {expected}"
                )
            }
            Error::Json(msg) => write!(f, "json: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
