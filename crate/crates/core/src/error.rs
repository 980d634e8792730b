use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator list contains 0")]
    ZeroGenerator,

    #[error("generators have gcd {gcd}, a numerical semigroup needs gcd 1")]
    GcdNotOne { gcd: BigUint },

    #[error("generators {a} and {m} are not coprime (gcd {gcd})")]
    NotCoprime {
        a: BigUint,
        m: BigUint,
        gcd: BigUint,
    },

    #[error("residue table modulo {modulus} exceeds the cap of {cap} residues")]
    AperyTooLarge { modulus: BigUint, cap: u64 },

    #[error("{x} is not a nonzero element of the semigroup")]
    XNotInSemigroup { x: BigUint },

    #[error("sieve bound {bound} exceeds the cap of {cap} cells")]
    SieveBoundExceeded { bound: BigUint, cap: u64 },

    #[error("gap list of length {genus} exceeds the cap of {cap} entries")]
    GapListTooLarge { genus: BigUint, cap: u64 },

    #[error("no run of {run} consecutive elements found below {bound}")]
    CertificationFailed { bound: u64, run: u64 },

    #[error("parameter out of domain: {0}")]
    ParamDomain(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("value needs about {bits} bits, above the cap of {cap} bits")]
    ValueTooLarge { bits: u64, cap: u64 },

    #[error("enumeration exceeds the cap of {cap} sequences")]
    EnumerationTooLarge { cap: u64 },

    #[error("residue class {residue} is hit twice, by {first} and {second}")]
    ResidueCollision {
        residue: u64,
        first: BigUint,
        second: BigUint,
    },

    #[error("residue class {residue} is never hit")]
    ResidueGap { residue: u64 },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
