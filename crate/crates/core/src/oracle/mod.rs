//! Brute-force ground truth and the cross-checking report built on it.

mod sieve;
mod verify;

pub use sieve::{oracle_apery, oracle_frobenius_genus, sieve, SieveTable};
pub use verify::{
    verify_grid, verify_instance, Check, CheckOutcome, MethodValues, VerificationReport,
};
