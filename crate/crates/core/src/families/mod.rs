//! The four generator families and everything known about them in closed
//! form.
//!
//! Terms are indexed from 0: `s_0` is always the multiplicity and the
//! modulus of the Apéry table, and a coefficient `t_j` multiplies `s_j` for
//! `j >= 1`.

mod apery;
mod closed;
mod sequences;

use std::fmt;
use std::str::FromStr;

use num_traits::One;

pub use apery::apery_via_r;
pub use closed::{
    closed_frobenius, closed_genus, coefficient_identity_check, count_fixed_coefficient,
    expanded_frobenius, max_apery_closed,
};
pub use sequences::{enumerate_a, enumerate_r, CoefficientSequence};

use crate::engine::{GeneratorSet, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Ordered by [`FamilyKind::name`], so sorted output is alphabetical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `(b + 1) b^(n+i) - 1`
    ThabitBase,
    /// `(b + 1) b^(n+i) + 1`, with `b ≢ 1 (mod 3)`
    ThabitSecondKind,
    /// `b^(n+i) + 1`, with `b` even
    Cunningham,
    /// `b^(b^(n+i)) + 1`, with `b` even
    FermatBase,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::ThabitBase,
        FamilyKind::ThabitSecondKind,
        FamilyKind::Cunningham,
        FamilyKind::FermatBase,
    ];

    /// Stable lowercase name used by the CLI and the report formats.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::ThabitBase => "thabit",
            FamilyKind::ThabitSecondKind => "thabit-second-kind",
            FamilyKind::Cunningham => "cunningham",
            FamilyKind::FermatBase => "fermat",
        }
    }

    /// Checks the base `b` against the family's domain.
    pub fn check_base(self, b: u64) -> Result<()> {
        if b < 2 {
            return Err(Error::ParamDomain(format!("{self} needs b >= 2, got {b}")));
        }
        match self {
            FamilyKind::ThabitSecondKind if b % 3 == 1 => Err(Error::ParamDomain(format!(
                "{self} needs b ≢ 1 (mod 3), got {b}"
            ))),
            FamilyKind::Cunningham | FamilyKind::FermatBase if b % 2 == 1 => Err(
                Error::ParamDomain(format!("{self} needs an even b, got {b}")),
            ),
            _ => Ok(()),
        }
    }
}

impl Ord for FamilyKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name().cmp(other.name())
    }
}

impl PartialOrd for FamilyKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "thabit" | "thabit-base" | "t" => Ok(FamilyKind::ThabitBase),
            "thabit-second-kind" | "thabit2" | "second-kind" | "t2" => {
                Ok(FamilyKind::ThabitSecondKind)
            }
            "cunningham" | "c" => Ok(FamilyKind::Cunningham),
            "fermat" | "fermat-base" | "f" => Ok(FamilyKind::FermatBase),
            other => Err(Error::ParamDomain(format!(
                "unknown family `{other}` (expected thabit, thabit-second-kind, cunningham or fermat)"
            ))),
        }
    }
}

/// One member of a family, with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyInstance {
    kind: FamilyKind,
    b: u64,
    n: u64,
}

impl FamilyInstance {
    pub fn new(kind: FamilyKind, b: u64, n: u64) -> Result<Self> {
        kind.check_base(b)?;
        Ok(FamilyInstance { kind, b, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of terms in the family's finite generating system.
    pub fn generator_count(&self) -> u64 {
        match self.kind {
            FamilyKind::ThabitBase | FamilyKind::ThabitSecondKind => self.n + 2,
            FamilyKind::Cunningham => (self.n + 1).max(2),
            FamilyKind::FermatBase => 2,
        }
    }

    /// The term `s_i`, evaluated exactly.
    pub fn term(&self, i: u64, limits: &Limits) -> Result<Natural> {
        let b = self.b;
        let e = self.n.checked_add(i).ok_or(Error::ValueTooLarge {
            bits: u64::MAX,
            cap: limits.max_value_bits,
        })?;
        let cap = limits.max_value_bits;
        Ok(match self.kind {
            FamilyKind::ThabitBase => Natural::from(b + 1) * pow(b, e, cap)? - 1u32,
            FamilyKind::ThabitSecondKind => Natural::from(b + 1) * pow(b, e, cap)? + 1u32,
            FamilyKind::Cunningham => pow(b, e, cap)? + 1u32,
            FamilyKind::FermatBase => {
                let inner = u32::try_from(e).ok().and_then(|e| b.checked_pow(e)).ok_or(
                    Error::ValueTooLarge {
                        bits: u64::MAX,
                        cap,
                    },
                )?;
                pow(b, inner, cap)? + 1u32
            }
        })
    }

    /// `s_0, …, s_(count-1)`.
    pub fn terms(&self, count: u64, limits: &Limits) -> Result<Vec<Natural>> {
        (0..count).map(|i| self.term(i, limits)).collect()
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(b={}, n={})", self.kind, self.b, self.n)
    }
}

/// `b^e`, refusing results longer than `cap_bits`.
pub(crate) fn pow(b: u64, e: u64, cap_bits: u64) -> Result<Natural> {
    let est = (e as f64 * (b as f64).log2()).ceil();
    if est > cap_bits as f64 {
        let bits = if est >= u64::MAX as f64 {
            u64::MAX
        } else {
            est as u64
        };
        return Err(Error::ValueTooLarge {
            bits,
            cap: cap_bits,
        });
    }
    let e = u32::try_from(e).map_err(|_| Error::ValueTooLarge {
        bits: u64::MAX,
        cap: cap_bits,
    })?;
    if b == 1 || e == 0 {
        return Ok(Natural::one());
    }
    Ok(Natural::from(b).pow(e))
}

/// The family's finite generating system: `s_0..=s_(n+1)` for both Thabit
/// kinds, `s_0..=s_n` for Cunningham (`s_0, s_1` when `n = 0`), and
/// `s_0, s_1` for Fermat.
pub fn family_generators(f: &FamilyInstance, limits: &Limits) -> Result<GeneratorSet> {
    GeneratorSet::new(f.terms(f.generator_count(), limits)?)
}

/// The generating system with `extra` further terms appended.
pub fn extended_generators(
    f: &FamilyInstance,
    extra: u64,
    limits: &Limits,
) -> Result<GeneratorSet> {
    GeneratorSet::new(f.terms(f.generator_count() + extra, limits)?)
}

/// Size of the minimal generating system.
pub fn embedding_dimension(f: &FamilyInstance) -> Result<u64> {
    match f.kind {
        FamilyKind::ThabitBase | FamilyKind::ThabitSecondKind => Ok(f.n + 2),
        FamilyKind::Cunningham if f.n == 0 => Err(Error::UnsupportedCase(
            "embedding dimension of the Cunningham family is only known for n >= 1".into(),
        )),
        FamilyKind::Cunningham => Ok(f.n + 1),
        FamilyKind::FermatBase => Ok(2),
    }
}
