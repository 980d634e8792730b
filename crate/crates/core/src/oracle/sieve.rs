use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::engine::{AperyTable, GapReport, GeneratorSet, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Membership of `⟨gens⟩` for every integer in `0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTable {
    bound: u64,
    representable: Vec<bool>,
}

impl SieveTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `None` above the bound.
    pub fn contains(&self, m: u64) -> Option<bool> {
        self.representable.get(usize::try_from(m).ok()?).copied()
    }

    pub fn cells(&self) -> &[bool] {
        &self.representable
    }

    /// Gaps up to the bound, ascending.
    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.representable
            .iter()
            .enumerate()
            .filter(|(_, r)| !**r)
            .map(|(m, _)| m as u64)
    }

    /// Elements up to the bound, ascending.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.representable
            .iter()
            .enumerate()
            .filter(|(_, r)| **r)
            .map(|(m, _)| m as u64)
    }

    fn last_gap(&self) -> Option<u64> {
        self.representable
            .iter()
            .rposition(|r| !r)
            .map(|m| m as u64)
    }
}

/// Dynamic-programming sieve: `m` is representable iff `m - a` is for some
/// generator `a <= m`.
pub fn sieve(gens: &GeneratorSet, bound: u64, limits: &Limits) -> Result<SieveTable> {
    let cells = bound
        .checked_add(1)
        .filter(|&c| c <= limits.max_sieve_cells)
        .ok_or(Error::SieveBoundExceeded {
            bound: bound.into(),
            cap: limits.max_sieve_cells,
        })?;
    let small: Vec<usize> = gens
        .iter()
        .filter_map(|g| g.to_u64())
        .filter(|&g| g <= bound)
        .map(|g| g as usize)
        .collect();
    let mut rep = vec![false; cells as usize];
    rep[0] = true;
    for m in 1..rep.len() {
        rep[m] = small.iter().any(|&a| a <= m && rep[m - a]);
    }
    Ok(SieveTable {
        bound,
        representable: rep,
    })
}

/// A sieve whose bound is past the Frobenius number, with proof: the last
/// gap inside it is followed by `least` consecutive elements.
pub(crate) struct Certified {
    pub sieve: SieveTable,
    pub frobenius: Option<u64>,
}

pub(crate) fn certify(
    gens: &GeneratorSet,
    hint: Option<&Natural>,
    limits: &Limits,
) -> Result<Certified> {
    let least = gens.least().clone();
    let candidate = match (hint, gens.as_slice()) {
        (Some(h), _) => h.clone(),
        (None, [a, b, ..]) => a * b,
        (None, _) => Natural::from(0u32),
    };
    let over = |bound: Natural| Error::SieveBoundExceeded {
        bound,
        cap: limits.max_sieve_cells,
    };
    let first = &candidate + &least;
    let mut bound = first.to_u64().ok_or_else(|| over(first.clone()))?;
    let run = least.to_u64().ok_or_else(|| over(least.clone()))?;
    for attempt in 0..2 {
        let table = sieve(gens, bound, limits)?;
        let last = table.last_gap();
        let certified = match last {
            None => run <= bound + 1,
            Some(f) => f + run <= bound,
        };
        if certified {
            return Ok(Certified {
                sieve: table,
                frobenius: last,
            });
        }
        if attempt == 0 {
            bound = bound
                .checked_mul(2)
                .ok_or_else(|| over(Natural::from(bound) * 2u32))?;
        }
    }
    Err(Error::CertificationFailed { bound, run })
}

/// Frobenius number and genus by exhaustive sieving.
///
/// `hint` (normally a closed-form candidate) only sizes the sieve;
/// the answer is accepted only once certified.
pub fn oracle_frobenius_genus(
    gens: &GeneratorSet,
    hint: Option<&Natural>,
    limits: &Limits,
) -> Result<GapReport> {
    let c = certify(gens, hint, limits)?;
    Ok(report_from(&c))
}

pub(crate) fn report_from(c: &Certified) -> GapReport {
    let frobenius = c.frobenius.map_or(BigInt::from(-1), BigInt::from);
    let genus = Natural::from(c.sieve.gaps().count());
    GapReport {
        frobenius,
        genus,
        gaps: None,
    }
}

/// `Ap(S, x)` read off a sieve: the least element in each class modulo `x`.
pub fn oracle_apery(
    gens: &GeneratorSet,
    x: &Natural,
    hint: Option<&Natural>,
    limits: &Limits,
) -> Result<AperyTable> {
    let c = certify(gens, hint, limits)?;
    apery_from(gens, &c, x, limits)
}

pub(crate) fn apery_from(
    gens: &GeneratorSet,
    c: &Certified,
    x: &Natural,
    limits: &Limits,
) -> Result<AperyTable> {
    let xv = x
        .to_u64()
        .filter(|&v| v > 0 && v <= limits.max_residues)
        .ok_or_else(|| Error::AperyTooLarge {
            modulus: x.clone(),
            cap: limits.max_residues,
        })?;
    // Every Apéry element is at most F + x.
    let need = c.frobenius.map_or(0, |f| f + 1) + xv;
    let resieved;
    let table = if need <= c.sieve.bound() {
        &c.sieve
    } else {
        resieved = sieve(gens, need, limits)?;
        &resieved
    };
    if table.contains(xv) != Some(true) {
        return Err(Error::XNotInSemigroup { x: x.clone() });
    }
    let mut seen = vec![false; xv as usize];
    let mut values = Vec::with_capacity(xv as usize);
    for m in table.members() {
        let r = (m % xv) as usize;
        if !seen[r] {
            seen[r] = true;
            values.push(Natural::from(m));
            if values.len() == xv as usize {
                break;
            }
        }
    }
    AperyTable::from_elements(x, values, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(v: &[u64]) -> GeneratorSet {
        GeneratorSet::from_u64s(v).unwrap()
    }

    fn gaps(t: &SieveTable) -> Vec<u64> {
        t.gaps().collect()
    }

    #[test]
    fn two_three_to_ten() {
        let t = sieve(&gens(&[2, 3]), 10, &Limits::default()).unwrap();
        assert_eq!(gaps(&t), [1]);
    }

    #[test]
    fn seven_eleven_thirteen_to_forty() {
        let t = sieve(&gens(&[7, 11, 13]), 40, &Limits::default()).unwrap();
        assert_eq!(
            gaps(&t),
            [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 17, 19, 23, 30]
        );
    }

    #[test]
    fn five_nine_seventeen() {
        let t = sieve(&gens(&[5, 9, 17]), 30, &Limits::default()).unwrap();
        assert_eq!(t.gaps().last(), Some(21));
    }

    #[test]
    fn frobenius_and_genus() {
        let l = Limits::default();
        for (g, f, genus) in [
            (&[5u64, 11, 23][..], 29, 16u32),
            (&[2, 3], 1, 1),
            (&[4, 7], 17, 9),
            (&[1], -1, 0),
            (&[1, 7], -1, 0),
        ] {
            let r = oracle_frobenius_genus(&gens(g), None, &l).unwrap();
            assert_eq!(
                (r.frobenius, r.genus),
                (BigInt::from(f), Natural::from(genus)),
                "{g:?}"
            );
        }
    }

    #[test]
    fn bad_hint_is_caught_by_certification() {
        let l = Limits::default();
        // Hint far too small: the first sieve cannot certify, the doubled one can.
        let r = oracle_frobenius_genus(&gens(&[7, 11, 13]), Some(&20u32.into()), &l).unwrap();
        assert_eq!(r.frobenius, BigInt::from(30));
        let err = oracle_frobenius_genus(&gens(&[7, 11, 13]), Some(&0u32.into()), &l).unwrap_err();
        assert!(matches!(err, Error::CertificationFailed { .. }));
    }

    #[test]
    fn apery_from_sieve() {
        let l = Limits::default();
        let t = oracle_apery(&gens(&[7, 11, 13]), &7u32.into(), None, &l).unwrap();
        let v: Vec<u64> = t
            .sorted_elements()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(v, [0, 11, 13, 22, 24, 26, 37]);
        let t = oracle_apery(&gens(&[2, 3]), &2u32.into(), None, &l).unwrap();
        assert_eq!(t.elements(), [0u32.into(), 3u32.into()]);
        let t = oracle_apery(&gens(&[11, 35, 107]), &11u32.into(), None, &l).unwrap();
        assert_eq!(t.max(), &Natural::from(284u32));
    }

    #[test]
    fn cell_cap() {
        let l = Limits {
            max_sieve_cells: 10,
            ..Limits::default()
        };
        assert!(matches!(
            sieve(&gens(&[2, 3]), 10, &l),
            Err(Error::SieveBoundExceeded { .. })
        ));
    }
}
