//! Exact characteristic numbers of model varieties over the integers.
//!
//! The crate computes, with arbitrary-precision integer arithmetic throughout:
//!
//! * integer partitions in the canonical descending-lexicographic order, with
//!   refinement tests and splitting enumeration ([`partitions`]);
//! * the polynomials expressing monomial symmetric functions through
//!   elementary symmetric variables, and the unimodular transition matrix
//!   between Chern-monomial numbers and the power-sum-type `s` numbers
//!   ([`symfunc`]);
//! * characteristic-number vectors of projective spaces, their products,
//!   disjoint unions and formal negations, plus the cone congruence for
//!   varieties whose hyperplane class is divisible ([`catalog`]);
//! * triangular generator families whose vectors span the full integer
//!   lattice as a semigroup, and recipes expressing any target vector with
//!   nonnegative multiplicities ([`realization`]);
//! * integration of constructible functions against the Euler characteristic
//!   on finite stratified descriptions ([`euler`]).
//!
//! All vectors are indexed by partitions of the dimension in the canonical
//! order of [`partitions::enumerate_partitions`]; JSON schemas are in
//! [`jsonio`].

pub mod catalog;
mod error;
pub mod euler;
pub mod jsonio;
pub mod partitions;
pub mod realization;
pub mod symfunc;

pub use error::Error;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
