use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::relax::Residues;
use super::{GeneratorSet, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `Ap(S, x)`: the least element of `S` in every residue class modulo `x`,
/// indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AperyTable {
    modulus: usize,
    w: Vec<Natural>,
}

/// Frobenius number, genus and (optionally) the gaps themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    /// Largest gap, or -1 when the semigroup is all of ℕ.
    pub frobenius: BigInt,
    pub genus: Natural,
    /// Ascending gap list, only filled when asked for.
    pub gaps: Option<Vec<Natural>>,
}

/// Computes `Ap(⟨gens⟩, x)` by round-robin relaxation.
///
/// `x` must be a nonzero element of the semigroup; the least generator is
/// the usual choice.
pub fn apery_set(gens: &GeneratorSet, x: &Natural, limits: &Limits) -> Result<AperyTable> {
    if x.is_zero() {
        return Err(Error::XNotInSemigroup { x: x.clone() });
    }
    let modulus = residue_count(x, limits)?;
    if x != gens.least() && !gens.contains_generator(x) {
        let base = apery_set(gens, gens.least(), limits)?;
        if !base.contains(x) {
            return Err(Error::XNotInSemigroup { x: x.clone() });
        }
    }

    let mut table = Residues::new(modulus, gens);
    for g in gens {
        table.relax(g);
    }
    let w = table
        .into_cells()
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| {
                Error::InternalInvariant(format!("residue {i} unreachable despite gcd 1"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AperyTable { modulus, w })
}

pub(crate) fn residue_count(x: &Natural, limits: &Limits) -> Result<usize> {
    match x.to_u64() {
        Some(v) if v <= limits.max_residues => {
            usize::try_from(v).map_err(|_| Error::AperyTooLarge {
                modulus: x.clone(),
                cap: limits.max_residues,
            })
        }
        _ => Err(Error::AperyTooLarge {
            modulus: x.clone(),
            cap: limits.max_residues,
        }),
    }
}

impl AperyTable {
    /// Places each value at its residue class modulo `modulus`.
    ///
    /// Fails with [`Error::ResidueCollision`] if two values share a class
    /// and with [`Error::ResidueGap`] if some class is left empty. Values
    /// are not checked for membership or minimality.
    pub fn from_elements<I>(modulus: &Natural, values: I, limits: &Limits) -> Result<Self>
    where
        I: IntoIterator<Item = Natural>,
    {
        if modulus.is_zero() {
            return Err(Error::XNotInSemigroup { x: modulus.clone() });
        }
        let x = residue_count(modulus, limits)?;
        let mut cells: Vec<Option<Natural>> = vec![None; x];
        for v in values {
            let r = (&v % modulus).to_usize().expect("residue below modulus");
            match &cells[r] {
                Some(first) => {
                    return Err(Error::ResidueCollision {
                        residue: r as u64,
                        first: first.clone(),
                        second: v,
                    })
                }
                None => cells[r] = Some(v),
            }
        }
        let w = cells
            .into_iter()
            .enumerate()
            .map(|(r, c)| c.ok_or(Error::ResidueGap { residue: r as u64 }))
            .collect::<Result<Vec<_>>>()?;
        if !w[0].is_zero() {
            return Err(Error::InternalInvariant(format!(
                "class 0 holds {} instead of 0",
                w[0]
            )));
        }
        Ok(AperyTable { modulus: x, w })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Elements indexed by residue class.
    pub fn elements(&self) -> &[Natural] {
        &self.w
    }

    pub fn sorted_elements(&self) -> Vec<Natural> {
        let mut v = self.w.clone();
        v.sort();
        v
    }

    pub fn max(&self) -> &Natural {
        self.w.iter().max().expect("table is never empty")
    }

    /// Position of the largest element.
    pub fn argmax(&self) -> usize {
        let max = self.max();
        self.w
            .iter()
            .position(|v| v == max)
            .expect("max is present")
    }

    /// `F(S) = max Ap(S, x) - x`; -1 when `x = 1`.
    pub fn frobenius(&self) -> BigInt {
        BigInt::from(self.max().clone()) - BigInt::from(self.modulus)
    }

    /// Selmer's formula `g(S) = (Σ w) / x - (x - 1) / 2`, in exact arithmetic.
    pub fn genus(&self) -> Result<Natural> {
        let x = Natural::from(self.modulus);
        let sum: Natural = self.w.iter().sum();
        let twice = BigInt::from(sum) * 2u32;
        let offset = BigInt::from(&x * (&x - 1u32));
        let numerator: BigInt = twice - offset;
        let denominator = BigInt::from(x) * 2;
        let (q, r) = numerator.div_rem(&denominator);
        if !r.is_zero() || q.sign() == num_bigint::Sign::Minus {
            return Err(Error::InternalInvariant(format!(
                "Selmer sum leaves remainder {r} over {denominator}"
            )));
        }
        Ok(q.to_biguint().expect("checked nonnegative"))
    }

    /// `m ∈ S` iff `w[m mod x] <= m`.
    pub fn contains(&self, m: &Natural) -> bool {
        let r = (m % self.modulus)
            .to_usize()
            .expect("residue below modulus");
        &self.w[r] <= m
    }

    /// Frobenius number and genus without the gap list.
    pub fn summary(&self) -> Result<GapReport> {
        Ok(GapReport {
            frobenius: self.frobenius(),
            genus: self.genus()?,
            gaps: None,
        })
    }

    /// Full gap report. The gap list is bounded by `limits.max_sieve_cells`.
    pub fn gaps(&self, limits: &Limits) -> Result<GapReport> {
        let genus = self.genus()?;
        if genus > Natural::from(limits.max_sieve_cells) {
            return Err(Error::GapListTooLarge {
                genus,
                cap: limits.max_sieve_cells,
            });
        }
        let x = Natural::from(self.modulus);
        let mut gaps = Vec::with_capacity(genus.to_usize().unwrap_or(0));
        for w in self.w.iter().skip(1) {
            let mut g = w.clone();
            while g >= x {
                g -= &x;
                gaps.push(g.clone());
            }
        }
        gaps.sort();
        if Natural::from(gaps.len()) != genus {
            return Err(Error::InternalInvariant(format!(
                "{} gaps listed but genus is {genus}",
                gaps.len()
            )));
        }
        Ok(GapReport {
            frobenius: self.frobenius(),
            genus,
            gaps: Some(gaps),
        })
    }
}
