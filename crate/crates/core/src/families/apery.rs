use num_traits::ToPrimitive;

use super::{enumerate_r, FamilyInstance, FamilyKind};
use crate::engine::{AperyTable, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Builds `Ap(S, s_0)` straight from the family's explicit description,
/// without any shortest-path search.
///
/// Each admissible coefficient sequence contributes `Σ t_j s_j`; the sums
/// must land in pairwise distinct residue classes covering all of
/// `0..s_0`. A collision or an empty class is returned as an error, since
/// it means the description does not hold for this instance.
pub fn apery_via_r(f: &FamilyInstance, limits: &Limits) -> Result<AperyTable> {
    let (b, n) = (f.b(), f.n());
    let s0 = f.term(0, limits)?;
    if !matches!(s0.to_u64(), Some(v) if v <= limits.max_residues) {
        return Err(Error::AperyTooLarge {
            modulus: s0,
            cap: limits.max_residues,
        });
    }
    let s = |i: u64| f.term(i, limits);

    let values: Vec<Natural> = match (f.kind(), n) {
        (FamilyKind::ThabitSecondKind, 0) => {
            let s1 = s(1)?;
            (0..=b + 1).map(|t| &s1 * t).collect()
        }
        (FamilyKind::ThabitSecondKind, 1) => {
            let (s1, s2) = (s(1)?, s(2)?);
            let mut v: Vec<Natural> = (0..b)
                .flat_map(|t2| (0..=b).map(move |t1| (t1, t2)))
                .map(|(t1, t2)| &s1 * t1 + &s2 * t2)
                .collect();
            v.push(&s2 * b);
            v
        }
        (FamilyKind::Cunningham, 0) => vec![Natural::from(0u32), s(1)?],
        (FamilyKind::Cunningham, 1) => {
            let s1 = s(1)?;
            (0..=b).map(|t| &s1 * t).collect()
        }
        (FamilyKind::FermatBase, _) => {
            let s1 = s(1)?;
            let top = (&s0 - 1u32).to_u64().expect("s_0 is under the residue cap");
            (0..=top).map(|k| &s1 * k).collect()
        }
        _ => {
            let seqs = enumerate_r(f, limits)?;
            let len = seqs.first().map_or(0, |t| t.len()) as u64;
            let terms = f.terms(len + 1, limits)?;
            seqs.iter().map(|t| t.weighted_sum(&terms)).collect()
        }
    };
    AperyTable::from_elements(&s0, values, limits)
}
