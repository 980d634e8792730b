//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every bound used below is a named
//! constant; all value comparisons are exact.

use std::process::Command;
use std::time::{Duration, Instant};

use frobenius_cli::report::{Document, InstanceRecord};
use frobenius_core::families::extended_generators;
use frobenius_core::{
    apery_set, apery_via_r, closed_frobenius, closed_genus, coefficient_identity_check,
    count_fixed_coefficient, embedding_dimension, enumerate_r, expanded_frobenius,
    family_generators, max_apery_closed, minimal_system, oracle_apery, oracle_frobenius_genus,
    sieve, sylvester_two_gen, FamilyInstance, FamilyKind, GeneratorSet, Limits, Natural,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRunner};

const REGRESSION_BUDGET: Duration = Duration::from_secs(1);
const THABIT_GRID_BUDGET: Duration = Duration::from_secs(60);
const CLI_BUDGET: Duration = Duration::from_secs(120);
const MIN_PROPERTY_CASES: usize = 100;
const RANDOM_CASES: u32 = 256;
const PROPERTY_RNG_SEED: [u8; 32] = [7; 32];
const MAX_R_SET: u64 = 200_000;
const MAX_STRUCTURE_MODULUS: u64 = 200_000;
const SAMPLES_PER_INSTANCE: usize = 64;

use FamilyKind::{Cunningham, FermatBase, ThabitBase, ThabitSecondKind};

struct Criterion {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    details: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            failures: Vec::new(),
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, expected: T, actual: T) {
        if expected != actual {
            self.failures
                .push(format!("{label}: expected {expected}, got {actual}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    fn timed<T>(&mut self, label: &str, budget: Duration, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        let took = start.elapsed();
        self.check(took < budget, || {
            format!("{label}: took {took:?}, budget {budget:?}")
        });
        out
    }

    fn report(&self) -> bool {
        let pass = self.failures.is_empty();
        println!(
            "{} [{}] {}",
            if pass { "PASS" } else { "FAIL" },
            self.id,
            self.title
        );
        for d in &self.details {
            println!("       {d}");
        }
        for f in &self.failures {
            println!("     ! {f}");
        }
        pass
    }
}

fn limits() -> Limits {
    Limits::default()
}

fn inst(kind: FamilyKind, b: u64, n: u64) -> FamilyInstance {
    FamilyInstance::new(kind, b, n).expect("grid point in domain")
}

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn gens(v: &[u64]) -> GeneratorSet {
    GeneratorSet::from_u64s(v).expect("valid generators")
}

fn join(v: &[Natural]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Engine, closed and oracle Frobenius/genus plus Apéry equality for one
/// family instance. Returns the engine values.
fn three_way(
    c: &mut Criterion,
    f: &FamilyInstance,
    compare_closed: bool,
) -> Option<(BigInt, Natural)> {
    let l = limits();
    let g = match family_generators(f, &l) {
        Ok(g) => g,
        Err(e) => {
            c.failures.push(format!("{f}: {e}"));
            return None;
        }
    };
    let engine = match apery_set(&g, g.least(), &l) {
        Ok(t) => t,
        Err(e) => {
            c.failures.push(format!("{f}: engine: {e}"));
            return None;
        }
    };
    let ef = engine.frobenius();
    let eg = engine.genus().expect("engine genus");
    let closed_f = closed_frobenius(f, &l).ok();
    match oracle_frobenius_genus(&g, closed_f.as_ref(), &l) {
        Ok(o) => {
            c.eq(&format!("{f} F engine vs oracle"), &o.frobenius, &ef);
            c.eq(&format!("{f} g engine vs oracle"), &o.genus, &eg);
        }
        Err(e) => c.failures.push(format!("{f}: oracle: {e}")),
    }
    if compare_closed {
        match (closed_f, closed_genus(f, &l)) {
            (Some(cf), Ok(cg)) => {
                c.eq(&format!("{f} F closed vs engine"), &BigInt::from(cf), &ef);
                c.eq(&format!("{f} g closed vs engine"), &cg, &eg);
            }
            (_, Err(e)) => c.failures.push(format!("{f}: closed genus: {e}")),
            (None, _) => c
                .failures
                .push(format!("{f}: closed Frobenius unavailable")),
        }
    }
    Some((ef, eg))
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "regression values for worked examples");
    let l = limits();

    c.timed("Ap(<7,11,13>, 7)", REGRESSION_BUDGET, |c| {
        let t = apery_set(&gens(&[7, 11, 13]), &nat(7), &l).unwrap();
        c.eq(
            "Ap(<7,11,13>, 7)",
            "0,11,13,22,24,26,37".to_string(),
            join(&t.sorted_elements()),
        );
    });

    c.timed("T_3(1)", REGRESSION_BUDGET, |c| {
        let f = inst(ThabitBase, 3, 1);
        let g = family_generators(&f, &l).unwrap();
        c.eq("T_3(1) generators", "11,35,107".to_string(), g.to_string());
        c.eq("e(T_3(1)) closed", 3, embedding_dimension(&f).unwrap());
        c.eq(
            "e(T_3(1)) minimal_system",
            3,
            minimal_system(&g, &l).unwrap().len(),
        );
        let t = apery_set(&g, g.least(), &l).unwrap();
        c.eq("max Ap(T_3(1))", nat(284), t.max().clone());
        c.eq(
            "max Ap(T_3(1)) closed",
            nat(284),
            max_apery_closed(&f, &l).unwrap(),
        );
        c.eq("F(T_3(1))", BigInt::from(273), t.frobenius());
    });

    for n in 0..=3u32 {
        c.timed(&format!("F(T_2({n}))"), REGRESSION_BUDGET, |c| {
            let formula = BigInt::from(9) * BigInt::from(4).pow(n)
                - BigInt::from(3) * BigInt::from(2).pow(n)
                - 1;
            let g = family_generators(&inst(ThabitBase, 2, n.into()), &l).unwrap();
            let engine = apery_set(&g, g.least(), &l).unwrap().frobenius();
            c.note(format!(
                "T_2({n}): 9*4^n - 3*2^n - 1 = {formula}, engine = {engine}"
            ));
            c.eq(
                &format!("F(T_2({n})) polynomial vs engine"),
                formula,
                engine,
            );
        });
    }

    c.timed("Fermat (2,1)", REGRESSION_BUDGET, |c| {
        let f = inst(FermatBase, 2, 1);
        c.eq(
            "F SF(2,1) closed",
            nat(63),
            closed_frobenius(&f, &l).unwrap(),
        );
        c.eq("g SF(2,1) closed", nat(32), closed_genus(&f, &l).unwrap());
        let g = family_generators(&f, &l).unwrap();
        let t = apery_set(&g, g.least(), &l).unwrap();
        c.eq("F SF(2,1) engine", BigInt::from(63), t.frobenius());
        c.eq("g SF(2,1) engine", nat(32), t.genus().unwrap());
    });

    for b in [2u64, 4, 6] {
        c.timed(&format!("Cunningham b={b}"), REGRESSION_BUDGET, |c| {
            c.eq(
                &format!("C_{b}(0) F"),
                nat(b - 1),
                closed_frobenius(&inst(Cunningham, b, 0), &l).unwrap(),
            );
            c.eq(
                &format!("C_{b}(1) F"),
                nat(b * b * b - 1),
                closed_frobenius(&inst(Cunningham, b, 1), &l).unwrap(),
            );
        });
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(
        2,
        "Thabit base b: closed = engine = oracle, R-set table = engine table",
    );
    let l = limits();
    let mut points = 0;
    c.timed("Thabit grid", THABIT_GRID_BUDGET, |c| {
        for b in 2..=5u64 {
            let top = if b <= 3 { 4 } else { 3 };
            for n in 0..=top {
                points += 1;
                let f = inst(ThabitBase, b, n);
                three_way(c, &f, true);
                let g = family_generators(&f, &l).unwrap();
                let engine = apery_set(&g, g.least(), &l).unwrap();
                match apery_via_r(&f, &l) {
                    Ok(t) => c.check(t == engine, || {
                        format!("{f}: R-set table differs from engine")
                    }),
                    Err(e) => c.failures.push(format!("{f}: R-set: {e}")),
                }
            }
        }
    });
    c.note(format!("{points} instances"));
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(
        3,
        "Thabit second kind: engine = oracle, generator-form closed F = oracle",
    );
    let l = limits();
    for b in [2u64, 3, 5, 6] {
        for n in 0..=3u64 {
            let f = inst(ThabitSecondKind, b, n);
            let g = family_generators(&f, &l).unwrap();
            let engine = apery_set(&g, g.least(), &l).unwrap();
            let hint = closed_frobenius(&f, &l).ok();
            match oracle_apery(&g, g.least(), hint.as_ref(), &l) {
                Ok(o) => c.check(o == engine, || {
                    format!("{f}: oracle Apéry differs from engine")
                }),
                Err(e) => c.failures.push(format!("{f}: oracle Apéry: {e}")),
            }
            let Some((ef, _)) = three_way(&mut c, &f, true) else {
                continue;
            };
            if n >= 2 {
                let s = |i| f.term(i, &l).unwrap();
                let generator_form =
                    BigInt::from(s(1) * 2u32 + (s(n) + s(n + 1)) * (b - 1)) - BigInt::from(s(0));
                c.eq(
                    &format!("{f} generator-form F vs oracle"),
                    &generator_form,
                    &ef,
                );
            }
            match expanded_frobenius(&f, &l) {
                Ok(x) if x != ef => c.note(format!(
                    "{f}: expanded polynomial gives {x}, oracle {ef} (reported)"
                )),
                Ok(_) => {}
                Err(e) => c.note(format!("{f}: expanded polynomial unavailable: {e}")),
            }
        }
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "Cunningham: closed = engine = oracle");
    for b in [2u64, 4, 6] {
        for n in 0..=4u64 {
            let f = inst(Cunningham, b, n);
            let Some((_, eg)) = three_way(&mut c, &f, true) else {
                continue;
            };
            match n {
                0 => c.eq(&format!("{f} g = b/2"), nat(b / 2), eg),
                1 => c.eq(&format!("{f} g = b^3/2"), nat(b * b * b / 2), eg),
                _ => {}
            }
        }
    }
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(
        5,
        "Fermat base b: closed = two-generator formula (= oracle where feasible)",
    );
    let l = limits();
    for (b, n, with_oracle) in [
        (2u64, 0u32, true),
        (2, 1, true),
        (2, 2, false),
        (4, 0, false),
    ] {
        let f = inst(FermatBase, b, n.into());
        let power = Natural::from(b).pow((b + 1) as u32 * (b as u32).pow(n));
        let expect_f = &power - 1u32;
        let expect_g = &power / 2u32;
        let cf = closed_frobenius(&f, &l).unwrap();
        let cg = closed_genus(&f, &l).unwrap();
        c.eq(&format!("{f} closed F vs b^((b+1)b^n) - 1"), &expect_f, &cf);
        c.eq(&format!("{f} closed g vs b^((b+1)b^n) / 2"), &expect_g, &cg);
        let g = family_generators(&f, &l).unwrap();
        let s = g.as_slice();
        let syl = sylvester_two_gen(&s[0], &s[1]).unwrap();
        c.eq(
            &format!("{f} closed F vs two-generator formula"),
            BigInt::from(cf.clone()),
            syl.frobenius,
        );
        c.eq(
            &format!("{f} closed g vs two-generator formula"),
            cg.clone(),
            syl.genus,
        );
        if with_oracle {
            let o = oracle_frobenius_genus(&g, Some(&cf), &l).unwrap();
            c.eq(
                &format!("{f} closed F vs oracle"),
                BigInt::from(cf),
                o.frobenius,
            );
            c.eq(&format!("{f} closed g vs oracle"), cg, o.genus);
        }
    }
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(
        6,
        "g(T_3(1)) = 140 by closed form, oracle and Selmer on the listed Apéry set",
    );
    let l = limits();
    let f = inst(ThabitBase, 3, 1);
    let closed = closed_genus(&f, &l).unwrap();
    let g = family_generators(&f, &l).unwrap();
    let oracle = oracle_frobenius_genus(&g, None, &l).unwrap().genus;

    // {0, s1, 2s1, 3s1, s2, s1+s2, 2s1+s2, 3s1+s2, 2s2, s1+2s2, 2s1+2s2}
    let (s0, s1, s2) = (11u64, 35u64, 107u64);
    let listed: Vec<u64> = [
        (0, 0),
        (1, 0),
        (2, 0),
        (3, 0),
        (0, 1),
        (1, 1),
        (2, 1),
        (3, 1),
        (0, 2),
        (1, 2),
        (2, 2),
    ]
    .iter()
    .map(|&(a, b)| a * s1 + b * s2)
    .collect();
    c.eq("listed Apéry set size", s0 as usize, listed.len());
    let sum: u64 = listed.iter().sum();
    // Selmer: g = (sum w)/s0 - (s0 - 1)/2, evaluated as (2 sum - s0 (s0 - 1)) / (2 s0).
    let num = 2 * sum - s0 * (s0 - 1);
    c.eq("Selmer numerator divisible", 0, num % (2 * s0));
    let selmer = nat(num / (2 * s0));

    c.eq("closed genus", nat(140), closed.clone());
    c.eq("oracle gap count", nat(140), oracle);
    c.eq("Selmer on listed set", nat(140), selmer);
    c.check(closed != nat(143), || "closed genus reproduces 143".into());
    c.note("the worked example's stated value 143 is not reproduced; all three methods give 140");
    c
}

fn random_generator_sets(runner: &mut TestRunner) -> Vec<GeneratorSet> {
    let strat = proptest::collection::vec(2u64..80, 1..6);
    let mut out = Vec::new();
    while out.len() < RANDOM_CASES as usize {
        let mut v = strat.new_tree(runner).expect("strategy").current();
        v.push(v[0] + 1);
        if let Ok(g) = GeneratorSet::from_u64s(&v) {
            out.push(g);
        }
    }
    out
}

fn structure_grid() -> Vec<FamilyInstance> {
    let mut v = Vec::new();
    for b in 2..=40u64 {
        for n in 0..=8u64 {
            let f = inst(ThabitBase, b, n);
            if f.term(0, &limits()).unwrap() <= nat(MAX_STRUCTURE_MODULUS) {
                v.push(f);
            }
        }
    }
    v
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "structural properties");
    let l = limits();

    // Apéry invariants on random sets.
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: RANDOM_CASES,
            ..Config::default()
        },
        proptest::test_runner::TestRng::from_seed(
            proptest::test_runner::RngAlgorithm::ChaCha,
            &PROPERTY_RNG_SEED,
        ),
    );
    let sets = random_generator_sets(&mut runner);
    for g in &sets {
        let x = g.least().to_u64().unwrap();
        let t = apery_set(g, g.least(), &l).unwrap();
        let top = t.max().to_u64().unwrap();
        let s = sieve(g, top, &l).unwrap();
        c.eq(&format!("<{g}> |Ap|"), x as usize, t.elements().len());
        for (i, w) in t.elements().iter().enumerate() {
            let w = w.to_u64().unwrap();
            c.check(w % x == i as u64, || {
                format!("<{g}>: {w} in residue slot {i}")
            });
            c.check(s.contains(w) == Some(true), || {
                format!("<{g}>: {w} not in S")
            });
            c.check(w < x || s.contains(w - x) == Some(false), || {
                format!("<{g}>: {w} - {x} in S")
            });
        }
    }
    c.note(format!(
        "Apéry invariants: {} random generator sets",
        sets.len()
    ));

    // #R = s_0.
    let mut r_cases = 0;
    for kind in [ThabitBase, ThabitSecondKind, Cunningham] {
        for b in 2..=12u64 {
            for n in 0..=12u64 {
                let Ok(f) = FamilyInstance::new(kind, b, n) else {
                    continue;
                };
                let Ok(s0) = f.term(0, &l) else { continue };
                if s0 > nat(MAX_R_SET) {
                    continue;
                }
                let Ok(r) = enumerate_r(&f, &l) else { continue };
                r_cases += 1;
                c.eq(&format!("{f} #R"), s0, nat(r.len() as u64));
            }
        }
    }
    c.check(r_cases >= MIN_PROPERTY_CASES, || {
        format!("#R: only {r_cases} cases")
    });
    c.note(format!("#R = s_0: {r_cases} instances"));

    // Max position and the missing b s_(n+1).
    let grid = structure_grid();
    for f in &grid {
        let (b, n) = (f.b(), f.n());
        let g = family_generators(f, &l).unwrap();
        let t = apery_set(&g, g.least(), &l).unwrap();
        let s0 = t.modulus() as u64;
        c.eq(
            &format!("{f} residue of max"),
            (s0 - (b - 1) % s0) % s0,
            t.argmax() as u64,
        );
        let v = f.term(n + 1, &l).unwrap() * b;
        c.check(!t.elements().contains(&v), || {
            format!("{f}: b s_(n+1) = {v} in Ap")
        });
    }
    c.check(grid.len() >= MIN_PROPERTY_CASES, || {
        format!("structure grid: only {} cases", grid.len())
    });
    c.note(format!(
        "max position and b s_(n+1) exclusion: {} instances",
        grid.len()
    ));

    // Push identities, recomputed here from the term formula.
    let mut id_cases = 0;
    for b in 2..=5u64 {
        for n in 0..=4u64 {
            let s = |i: u64| Natural::from(b + 1) * Natural::from(b).pow((n + i) as u32) - 1u32;
            for j in 1..=n + 1 {
                let top = if j <= n { j } else { n + 1 };
                for i in 1..=top {
                    id_cases += 1;
                    let lhs = s(i) + s(j) * b;
                    let rhs = if j <= n {
                        s(i - 1) * b + s(j + 1)
                    } else {
                        s(i - 1) * b + s(0) * s(0) * (b - 1) + s(0) * (b - 2) + s(1) + s(n)
                    };
                    c.check(lhs == rhs, || format!("identity b={b} n={n} i={i} j={j}"));
                    let lib = coefficient_identity_check(b, n, i, j, &l);
                    c.check(lib == Ok(true), || {
                        format!("library identity b={b} n={n} i={i} j={j}: {lib:?}")
                    });
                }
            }
        }
    }
    c.check(id_cases >= MIN_PROPERTY_CASES, || {
        format!("identities: only {id_cases} cases")
    });
    c.note(format!("push identities: {id_cases} (b, n, i, j)"));

    // Counting lemmas vs enumeration.
    let mut count_cases = 0;
    for b in 2..=4u64 {
        for n in 2..=4u64 {
            let r = enumerate_r(&inst(ThabitBase, b, n), &l).unwrap();
            for i in 1..=n + 1 {
                for k in 1..=b {
                    count_cases += 1;
                    let seen = r.iter().filter(|t| t.t(i as usize) == k).count() as u64;
                    c.eq(
                        &format!("count b={b} n={n} i={i} k={k}"),
                        nat(seen),
                        count_fixed_coefficient(b, n, i, k).unwrap(),
                    );
                }
            }
        }
    }
    c.check(count_cases >= MIN_PROPERTY_CASES, || {
        format!("counting: only {count_cases} cases")
    });
    c.note(format!("counting lemmas: {count_cases} (b, n, i, k)"));

    // Closure and shift on sieve-sampled elements.
    let (mut closure_cases, mut shift_cases) = (0, 0);
    for b in 2..=5u64 {
        for n in 0..=3u64 {
            let f = inst(ThabitBase, b, n);
            let g = family_generators(&f, &l).unwrap();
            let t = apery_set(&g, g.least(), &l).unwrap();
            let s0 = t.modulus() as u64;
            let bound = t.max().to_u64().unwrap();
            let sv = sieve(&g, bound, &l).unwrap();
            let members: Vec<u64> = sv.members().skip(1).collect();
            let stride = members.len().div_ceil(SAMPLES_PER_INSTANCE).max(1);
            for &m in members.iter().step_by(stride) {
                closure_cases += 1;
                let up = Natural::from(m) * b + (b - 1);
                c.check(t.contains(&up), || format!("{f}: b*{m} + b - 1 not in S"));
                if m % s0 != 0 {
                    shift_cases += 1;
                    c.check(m >= b - 1 && t.contains(&nat(m - (b - 1))), || {
                        format!("{f}: {m} - (b-1) not in S")
                    });
                }
            }
        }
    }
    c.check(closure_cases >= MIN_PROPERTY_CASES, || {
        format!("closure: only {closure_cases} cases")
    });
    c.check(shift_cases >= MIN_PROPERTY_CASES, || {
        format!("shift: only {shift_cases} cases")
    });
    c.note(format!(
        "closure: {closure_cases} elements, shift: {shift_cases} elements"
    ));
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(
        8,
        "one extra family term leaves the minimal system unchanged",
    );
    let l = limits();
    let mut grid: Vec<FamilyInstance> = Vec::new();
    for b in 2..=5u64 {
        for n in 0..=if b <= 3 { 4 } else { 3 } {
            grid.push(inst(ThabitBase, b, n));
        }
    }
    for b in [2u64, 3, 5, 6] {
        grid.extend((0..=3).map(|n| inst(ThabitSecondKind, b, n)));
    }
    for b in [2u64, 4, 6] {
        grid.extend((0..=4).map(|n| inst(Cunningham, b, n)));
    }
    for (b, n) in [(2u64, 0u64), (2, 1), (2, 2), (4, 0)] {
        grid.push(inst(FermatBase, b, n));
    }
    for f in &grid {
        let n = f.n();
        let size = match f.kind() {
            ThabitBase | ThabitSecondKind => n + 2,
            Cunningham => (n + 1).max(2),
            FermatBase => 2,
        };
        let expected = family_generators(f, &l).unwrap();
        c.eq(&format!("{f} listed size"), size as usize, expected.len());
        let got = minimal_system(&extended_generators(f, 1, &l).unwrap(), &l).unwrap();
        c.eq(
            &format!("{f} minimal system"),
            expected.to_string(),
            got.to_string(),
        );
    }
    c.note(format!("{} instances", grid.len()));
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "verify --family all --b 2..4 --n 0..3 --format json");
    let args = [
        "verify", "--family", "all", "--b", "2..4", "--n", "0..3", "--format", "json",
    ];
    let run = |c: &mut Criterion| {
        c.timed("verify run", CLI_BUDGET, |_| {
            Command::new(env!("CARGO_BIN_EXE_frobenius"))
                .args(args)
                .output()
                .expect("binary runs")
        })
    };
    let first = run(&mut c);
    let second = run(&mut c);
    c.eq("exit status", 0, first.status.code().unwrap_or(-1));
    c.check(first.stdout == second.stdout, || "two runs differ".into());
    let text = String::from_utf8(first.stdout).unwrap_or_default();
    match serde_json::from_str::<serde_json::Value>(&text) {
        Ok(v) => {
            c.eq(
                "schema_version",
                "1".to_string(),
                v["schema_version"].to_string(),
            );
            let instances = v["instances"].as_array().cloned().unwrap_or_default();
            c.check(!instances.is_empty(), || "no instances".into());
            for inst in &instances {
                let label = format!("{}({},{})", inst["family"], inst["b"], inst["n"]);
                c.check(
                    inst["family"].is_string() && inst["b"].is_u64() && inst["n"].is_u64(),
                    || format!("{label}: bad key fields"),
                );
                c.check(
                    inst["embedding_dimension"].is_u64() || inst["embedding_dimension"].is_null(),
                    || format!("{label}: bad embedding_dimension"),
                );
                let gens_ok = inst["generators"]
                    .as_array()
                    .is_some_and(|g| g.iter().all(|x| x.is_string()));
                c.check(gens_ok, || format!("{label}: generators not strings"));
                for q in ["frobenius", "genus"] {
                    let ok = inst[q]
                        .as_object()
                        .is_some_and(|m| m.values().all(|x| x.is_string() || x.is_null()));
                    c.check(ok, || format!("{label}: {q} values not strings"));
                }
                let checks_ok = inst["checks"].as_array().is_some_and(|cs| {
                    cs.iter().all(|ch| {
                        ch["name"].is_string()
                            && (ch["agree"].is_boolean() || ch["agree"].is_null())
                            && (ch["note"].is_string() || ch["note"].is_null())
                    })
                });
                c.check(checks_ok, || format!("{label}: malformed checks"));
            }
            match serde_json::from_str::<Document<InstanceRecord>>(&text) {
                Ok(doc) => c.check(doc.to_json() == text, || {
                    "re-serialized JSON differs".into()
                }),
                Err(e) => c.failures.push(format!("typed parse: {e}")),
            }
            c.note(format!(
                "{} instances, {} bytes",
                instances.len(),
                text.len()
            ));
        }
        Err(e) => c.failures.push(format!("invalid JSON: {e}")),
    }
    c
}

fn main() {
    // `cargo test -- --list` style probes must not run the suite.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria = [
        criterion_1 as fn() -> Criterion,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut failed = 0;
    for run in criteria {
        if !run().report() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
