use std::fmt;

use super::{FamilyInstance, FamilyKind};
use crate::engine::Natural;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Coefficients `(t_1, …, t_m)`; `t_j` multiplies the family term `s_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoefficientSequence(Vec<u64>);

impl CoefficientSequence {
    pub fn new(t: Vec<u64>) -> Self {
        CoefficientSequence(t)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `t_j` for the 1-based index `j`.
    pub fn t(&self, j: usize) -> u64 {
        self.0[j - 1]
    }

    /// `Σ t_j s_j`, where `terms[j]` is `s_j` (so `terms[0]` is unused).
    pub fn weighted_sum(&self, terms: &[Natural]) -> Natural {
        self.0
            .iter()
            .zip(&terms[1..])
            .filter(|(t, _)| **t != 0)
            .map(|(&t, s)| s * t)
            .sum()
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// Every `t ∈ {0..b}^len` where `b` may only occur at the first nonzero
/// position and the last entry is at most `b - 1`, filtered by `keep`.
/// Output is in lexicographic order.
fn enumerate_prefix_free<F>(
    b: u64,
    len: usize,
    limits: &Limits,
    keep: F,
) -> Result<Vec<CoefficientSequence>>
where
    F: Fn(&[u64]) -> bool,
{
    fn walk<F: Fn(&[u64]) -> bool>(
        b: u64,
        len: usize,
        cur: &mut Vec<u64>,
        all_zero: bool,
        out: &mut Vec<CoefficientSequence>,
        cap: u64,
        keep: &F,
    ) -> Result<()> {
        if cur.len() == len {
            if keep(cur) {
                if out.len() as u64 >= cap {
                    return Err(Error::EnumerationTooLarge { cap });
                }
                out.push(CoefficientSequence(cur.clone()));
            }
            return Ok(());
        }
        let last = cur.len() + 1 == len;
        let top = if all_zero && !last { b } else { b - 1 };
        for v in 0..=top {
            cur.push(v);
            walk(b, len, cur, all_zero && v == 0, out, cap, keep)?;
            cur.pop();
        }
        Ok(())
    }

    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    walk(
        b,
        len,
        &mut cur,
        true,
        &mut out,
        limits.max_enumeration,
        &keep,
    )?;
    Ok(out)
}

/// `A_b(n)`: sequences of length `n + 1` over `{0..b}` with `t_(n+1) <= b - 1`
/// and `t_j = b` only if every earlier entry is 0.
pub fn enumerate_a(b: u64, n: u64, limits: &Limits) -> Result<Vec<CoefficientSequence>> {
    if b < 2 {
        return Err(Error::ParamDomain(format!("A_b(n) needs b >= 2, got {b}")));
    }
    let len = seq_len(n)?;
    enumerate_prefix_free(b, len, limits, |_| true)
}

fn seq_len(n: u64) -> Result<usize> {
    usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or_else(|| Error::ParamDomain(format!("n = {n} is too large to enumerate")))
}

/// The admissible set whose weighted sums are exactly `Ap(S, s_0)`:
/// `R_b(n)` (Thabit base `b`, any `n`), `R_b'(n)` (second kind, `n >= 2`) or
/// `RC_b(n)` (Cunningham, `n >= 2`).
pub fn enumerate_r(f: &FamilyInstance, limits: &Limits) -> Result<Vec<CoefficientSequence>> {
    let (b, n) = (f.b(), f.n());
    match f.kind() {
        FamilyKind::ThabitBase => {
            let len = seq_len(n)?;
            enumerate_prefix_free(b, len, limits, |t| {
                // t[len-1] is t_(n+1), t[len-2] is t_n
                if len < 2 || t[len - 1] != b - 1 {
                    return true;
                }
                let tn = t[len - 2];
                tn < b - 1 || (tn == b - 1 && t[..len - 2].iter().all(|&x| x == 0))
            })
        }
        FamilyKind::ThabitSecondKind => {
            if n < 2 {
                return Err(Error::UnsupportedCase(format!(
                    "R_b'(n) is only characterised for n >= 2, got n = {n}"
                )));
            }
            let len = seq_len(n)?;
            enumerate_prefix_free(b, len, limits, |t| {
                if t[len - 1] != b - 1 {
                    return true;
                }
                let tn = t[len - 2];
                if tn < b - 1 {
                    return true;
                }
                tn == b - 1 && t[0] <= 2 && t[1..len - 2].iter().all(|&x| x == 0)
            })
        }
        FamilyKind::Cunningham => {
            if n < 2 {
                return Err(Error::UnsupportedCase(format!(
                    "RC_b(n) is only characterised for n >= 2, got n = {n}"
                )));
            }
            let len = seq_len(n)? - 1;
            enumerate_prefix_free(b, len, limits, |t| {
                t[len - 1] != b - 1 || (t[0] <= 1 && t[1..len - 1].iter().all(|&x| x == 0))
            })
        }
        FamilyKind::FermatBase => Err(Error::UnsupportedCase(
            "the Fermat family has no coefficient-sequence characterisation".into(),
        )),
    }
}
