//! Shared inputs for the benchmarks.

use frobenius_core::{
    family_generators, FamilyInstance, FamilyKind, GeneratorSet, Limits, Natural,
};

/// Generator sets of increasing multiplicity, each small enough for the
/// oracle sieve.
pub fn sieve_sized_sets() -> Vec<(&'static str, GeneratorSet)> {
    let sets: [(&str, &[u64]); 4] = [
        ("7,11,13", &[7, 11, 13]),
        ("thabit(3,1)", &[11, 35, 107]),
        ("101,203,307,409", &[101, 203, 307, 409]),
        ("1009,1511,2003", &[1009, 1511, 2003]),
    ];
    sets.iter()
        .map(|(name, v)| (*name, GeneratorSet::from_u64s(v).expect("valid set")))
        .collect()
}

/// Family instances used for end-to-end verification timings.
pub fn verify_instances() -> Vec<FamilyInstance> {
    [
        (FamilyKind::ThabitBase, 3, 2),
        (FamilyKind::ThabitBase, 4, 3),
        (FamilyKind::ThabitSecondKind, 5, 2),
        (FamilyKind::Cunningham, 4, 3),
        (FamilyKind::FermatBase, 2, 2),
    ]
    .into_iter()
    .map(|(k, b, n)| FamilyInstance::new(k, b, n).expect("in domain"))
    .collect()
}

/// Thabit generators whose values exceed 64 bits, forcing the
/// arbitrary-precision relaxation path.
pub fn wide_thabit() -> GeneratorSet {
    let f = FamilyInstance::new(FamilyKind::ThabitBase, 2, 60).expect("in domain");
    let g = family_generators(&f, &Limits::default()).expect("fits the default caps");
    // Keep the modulus small: start from 1009 and add the wide terms.
    GeneratorSet::new(std::iter::once(Natural::from(1009u32)).chain(g.into_vec())).expect("gcd 1")
}
