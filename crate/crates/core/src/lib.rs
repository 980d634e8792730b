//! Numerical semigroups: Apéry sets, Frobenius numbers, genera and minimal
//! generating systems, together with closed-form evaluators for four
//! generator families (Thabit base `b`, Thabit of the second kind base `b`,
//! Cunningham and Fermat base `b`).
//!
//! The crate is split in three layers:
//!
//! * [`engine`] holds the family-agnostic algorithms. Everything is driven
//!   by an [`AperyTable`] computed with the round-robin relaxation over
//!   residue classes modulo the multiplicity.
//! * [`families`] builds the four families, enumerates their admissible
//!   coefficient sequences and evaluates every closed form.
//! * [`oracle`] is an exhaustive sieve used as ground truth, plus the
//!   per-instance [`VerificationReport`] that cross-checks all of the above.
//!
//! ```
//! use frobenius_core::{apery_set, GeneratorSet, Limits};
//!
//! let gens = GeneratorSet::from_u64s(&[7, 11, 13]).unwrap();
//! let table = apery_set(&gens, &7u32.into(), &Limits::default()).unwrap();
//! assert_eq!(table.frobenius(), 30.into());
//! assert_eq!(table.genus().unwrap(), 16u32.into());
//! ```

pub mod engine;
pub mod error;
pub mod families;
pub mod limits;
pub mod oracle;

pub use engine::{
    apery_set, minimal_system, sylvester_two_gen, AperyTable, GapReport, GeneratorSet, Natural,
};
pub use error::{Error, Result};
pub use families::{
    apery_via_r, closed_frobenius, closed_genus, coefficient_identity_check,
    count_fixed_coefficient, embedding_dimension, enumerate_a, enumerate_r, expanded_frobenius,
    family_generators, max_apery_closed, CoefficientSequence, FamilyInstance, FamilyKind,
};
pub use limits::Limits;
pub use oracle::{
    oracle_apery, oracle_frobenius_genus, sieve, verify_grid, verify_instance, Check, CheckOutcome,
    MethodValues, SieveTable, VerificationReport,
};
