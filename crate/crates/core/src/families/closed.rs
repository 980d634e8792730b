//! Closed-form values for the four families.
//!
//! Two routes are kept apart on purpose. The generator form adds up family
//! terms `s_i` (the largest Apéry element minus `s_0`); the expanded form is
//! a polynomial in `b` and `n` alone. They are compared, not merged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{pow, FamilyInstance, FamilyKind};
use crate::engine::Natural;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Intermediate powers inside a closed form may be a few times longer than
/// any single term.
fn formula_cap(limits: &Limits) -> u64 {
    limits.max_value_bits.saturating_mul(4)
}

fn int(v: Natural) -> BigInt {
    BigInt::from(v)
}

fn ipow(b: u64, e: u64, limits: &Limits) -> Result<BigInt> {
    pow(b, e, formula_cap(limits)).map(int)
}

fn to_natural(v: BigInt, what: &str) -> Result<Natural> {
    v.to_biguint()
        .ok_or_else(|| Error::InternalInvariant(format!("{what} evaluated to a negative number")))
}

fn halve(v: BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = v.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::InternalInvariant(format!(
            "{what}: odd numerator {v} under /2"
        )));
    }
    Ok(q)
}

/// Largest element of `Ap(S, s_0)`, as a sum of family terms.
pub fn max_apery_closed(f: &FamilyInstance, limits: &Limits) -> Result<Natural> {
    let (b, n) = (f.b(), f.n());
    let s = |i: u64| f.term(i, limits);
    Ok(match (f.kind(), n) {
        // With n = 0 the s_n term is s_0 itself, which is 0 modulo s_0.
        (FamilyKind::ThabitBase, 0) => s(1)? * (b - 1),
        (FamilyKind::ThabitBase, _) => (s(n)? + s(n + 1)?) * (b - 1),
        (FamilyKind::ThabitSecondKind, 0) => s(1)? * (b + 1),
        (FamilyKind::ThabitSecondKind, 1) => s(1)? * b + s(2)? * (b - 1),
        (FamilyKind::ThabitSecondKind, _) => s(1)? * 2u32 + (s(n)? + s(n + 1)?) * (b - 1),
        (FamilyKind::Cunningham, 0) => s(1)?,
        (FamilyKind::Cunningham, 1) => s(1)? * b,
        (FamilyKind::Cunningham, _) => s(1)? + s(n)? * (b - 1),
        (FamilyKind::FermatBase, _) => (s(0)? - 1u32) * s(1)?,
    })
}

/// Frobenius number from the generator form: `max Ap(S, s_0) - s_0`.
pub fn closed_frobenius(f: &FamilyInstance, limits: &Limits) -> Result<Natural> {
    let max = max_apery_closed(f, limits)?;
    let s0 = f.term(0, limits)?;
    to_natural(int(max) - int(s0), "Frobenius number")
}

/// Frobenius number from the fully expanded polynomials in `b` and `n`.
///
/// For the second kind with `n >= 2` this polynomial does not agree with
/// the generator form; callers should treat [`closed_frobenius`] as
/// authoritative and report the difference.
pub fn expanded_frobenius(f: &FamilyInstance, limits: &Limits) -> Result<BigInt> {
    let (b, n) = (f.b(), f.n());
    let bi = BigInt::from(b);
    let p = |e: u64| ipow(b, e, limits);
    Ok(match (f.kind(), n) {
        (FamilyKind::ThabitBase, _) => {
            let lead = p(3)? + p(2)? - &bi - 1;
            lead * p(2 * n)? - (&bi + 1) * p(n)? - &bi * 2 + 3
        }
        (FamilyKind::ThabitSecondKind, 0) => p(3)? + p(2)? * 2 + &bi - 1,
        (FamilyKind::ThabitSecondKind, 1) => p(5)? + p(4)? - p(2)? + &bi - 2,
        (FamilyKind::ThabitSecondKind, _) => {
            p(2 * n + 3)? + p(2 * n + 2)? - p(2 * n + 1)? - p(2 * n)?
                + p(n + 2)? * 2
                + p(n + 1)? * 2
                + p(2)? * 2
        }
        (FamilyKind::Cunningham, 0) => &bi - 1,
        (FamilyKind::Cunningham, 1) => p(3)? - 1,
        (FamilyKind::Cunningham, _) => (&bi - 1) * (p(2 * n)? + p(n)? + 1),
        (FamilyKind::FermatBase, _) => {
            let e = fermat_exponent(b, n, limits)?;
            p(e)? - 1
        }
    })
}

/// `(b + 1) b^n`, the exponent in the Fermat closed forms.
fn fermat_exponent(b: u64, n: u64, limits: &Limits) -> Result<u64> {
    u32::try_from(n)
        .ok()
        .and_then(|n| b.checked_pow(n))
        .and_then(|bn| bn.checked_mul(b + 1))
        .ok_or(Error::ValueTooLarge {
            bits: u64::MAX,
            cap: formula_cap(limits),
        })
}

/// Genus from the closed-form theorems and corollaries.
pub fn closed_genus(f: &FamilyInstance, limits: &Limits) -> Result<Natural> {
    let (b, n) = (f.b(), f.n());
    let bi = BigInt::from(b);
    let ni = BigInt::from(n);
    let p = |e: u64| ipow(b, e, limits);
    let g = match (f.kind(), n) {
        (FamilyKind::ThabitBase, _) => {
            let lead = p(3)? + p(2)? - &bi - 1;
            let mid = (&ni - 1) * (p(2)? - 1) - 2;
            halve(lead * p(2 * n)? + mid * p(n)? - &bi * 2 + 4, "Thabit genus")?
        }
        (FamilyKind::ThabitSecondKind, 0) => {
            halve(p(3)? + p(2)? * 2 + &bi, "second-kind genus, n = 0")?
        }
        (FamilyKind::ThabitSecondKind, 1) => {
            halve(p(5)? + p(4)? + p(3)? - p(2)?, "second-kind genus, n = 1")?
        }
        (FamilyKind::ThabitSecondKind, _) => {
            let lead = p(3)? + p(2)? - &bi - 1;
            let mid = p(2)? * (&ni + 1) - (&ni + 3);
            &bi * 3 + halve(p(2 * n)? * lead + p(n)? * mid, "second-kind genus")?
        }
        (FamilyKind::Cunningham, 0) => halve(bi, "Cunningham genus, n = 0")?,
        (FamilyKind::Cunningham, 1) => halve(p(3)?, "Cunningham genus, n = 1")?,
        (FamilyKind::Cunningham, _) => {
            let mid = &bi * &ni - &ni - 1;
            &bi + halve(p(2 * n)? * (&bi - 1) + p(n)? * mid, "Cunningham genus")?
        }
        (FamilyKind::FermatBase, _) => {
            let e = fermat_exponent(b, n, limits)?;
            halve(p(e)?, "Fermat genus")?
        }
    };
    if g.is_negative() {
        return Err(Error::InternalInvariant(format!("{f}: negative genus {g}")));
    }
    to_natural(g, "genus")
}

/// `#{t ∈ R_b(n) | t_i = k}` for the Thabit family, `n >= 2`.
pub fn count_fixed_coefficient(b: u64, n: u64, i: u64, k: u64) -> Result<Natural> {
    if b < 2 || n < 2 {
        return Err(Error::ParamDomain(format!(
            "coefficient counts need b >= 2 and n >= 2, got b = {b}, n = {n}"
        )));
    }
    if i == 0 || i > n + 1 {
        return Err(Error::ParamDomain(format!(
            "index i = {i} outside 1..={}",
            n + 1
        )));
    }
    if k == 0 || k > b {
        return Err(Error::ParamDomain(format!("value k = {k} outside 1..={b}")));
    }
    let cap = Limits::default().max_value_bits;
    let p = |e: u64| pow(b, e, cap);
    let bn = Natural::from(b);
    Ok(if k == b {
        if i < n {
            (&bn * &bn - 1u32) * p(n - i - 1)?
        } else if i == n {
            bn - 1u32
        } else {
            Natural::zero()
        }
    } else if i < n {
        (&bn + 1u32) * (p(n - 1)? - p(n - i - 1)?)
    } else if i == n {
        if k == b - 1 {
            p(n)?
        } else {
            (p(n + 1)? - &bn) / (bn - 1u32)
        }
    } else if k == b - 1 {
        p(n)?
    } else {
        (p(n + 1)? - 1u32) / (bn - 1u32)
    })
}

/// Checks the push identities between Thabit terms:
///
/// * `0 < i <= j < n + 1`: `s_i + b s_j = b s_(i-1) + s_(j+1)`
/// * `0 < i <= n + 1`, `j = n + 1`:
///   `s_i + b s_(n+1) = b s_(i-1) + (b-1) s_0^2 + (b-2) s_0 + s_1 + s_n`
pub fn coefficient_identity_check(b: u64, n: u64, i: u64, j: u64, limits: &Limits) -> Result<bool> {
    let f = FamilyInstance::new(FamilyKind::ThabitBase, b, n)?;
    if i == 0 || j > n + 1 || (j <= n && i > j) {
        return Err(Error::ParamDomain(format!(
            "identity indices need 0 < i <= j <= n + 1, got i = {i}, j = {j}, n = {n}"
        )));
    }
    let s = |x: u64| f.term(x, limits);
    let lhs = s(i)? + s(j)? * b;
    let rhs = if j <= n {
        s(i - 1)? * b + s(j + 1)?
    } else {
        let s0 = s(0)?;
        s(i - 1)? * b + &s0 * &s0 * (b - 1) + &s0 * (b - 2) + s(1)? + s(n)?
    };
    Ok(lhs == rhs)
}
