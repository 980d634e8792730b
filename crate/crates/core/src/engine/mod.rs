//! Family-agnostic numerical-semigroup algorithms.
//!
//! All membership questions are answered through an [`AperyTable`]: once the
//! least element of every residue class modulo the multiplicity is known,
//! `m ∈ S` is a single comparison, so queries cost nothing even for
//! astronomically large `m`.

mod apery;
mod generators;
mod minimal;
mod relax;

pub use apery::{apery_set, AperyTable, GapReport};
pub use generators::GeneratorSet;
pub use minimal::{minimal_system, sylvester_two_gen};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;
