use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::apery::residue_count;
use super::relax::Residues;
use super::{GapReport, GeneratorSet, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The unique minimal system of generators of `⟨gens⟩`.
///
/// Generators are scanned in ascending order; each one is dropped when it is
/// already a combination of those kept before it. Representability is read
/// off a residue table modulo the least generator that grows by one
/// relaxation pass per kept generator, so the test is exact for generators
/// of any size.
pub fn minimal_system(gens: &GeneratorSet, limits: &Limits) -> Result<GeneratorSet> {
    let modulus = residue_count(gens.least(), limits)?;
    let mut table = Residues::new(modulus, gens);
    let mut kept = vec![gens.least().clone()];
    for g in gens.iter().skip(1) {
        if !table.represents(g) {
            table.relax(g);
            kept.push(g.clone());
        }
    }
    Ok(GeneratorSet::from_sorted_unchecked(kept))
}

/// Sylvester's closed forms for two coprime generators:
/// `F = am - a - m`, `g = (a - 1)(m - 1) / 2`.
pub fn sylvester_two_gen(a: &Natural, m: &Natural) -> Result<GapReport> {
    if *a < Natural::from(2u32) || *m < Natural::from(2u32) {
        return Err(Error::ParamDomain(format!(
            "two-generator formula needs a, m >= 2, got {a} and {m}"
        )));
    }
    let gcd = a.gcd(m);
    if !gcd.is_one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            m: m.clone(),
            gcd,
        });
    }
    let frobenius = BigInt::from(a * m) - BigInt::from(a.clone()) - BigInt::from(m.clone());
    let genus = ((a - 1u32) * (m - 1u32)) >> 1;
    Ok(GapReport {
        frobenius,
        genus,
        gaps: None,
    })
}
