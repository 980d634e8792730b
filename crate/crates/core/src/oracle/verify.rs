use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::sieve::{apery_from, certify, report_from, Certified};
use crate::engine::{apery_set, minimal_system, sylvester_two_gen, AperyTable, Natural};
use crate::error::Result;
use crate::families::{
    apery_via_r, closed_frobenius, closed_genus, coefficient_identity_check,
    count_fixed_coefficient, embedding_dimension, enumerate_r, expanded_frobenius,
    extended_generators, family_generators, max_apery_closed, FamilyInstance, FamilyKind,
};
use crate::limits::Limits;

/// Largest number of semigroup elements fed to the closure and shift checks.
const PROPERTY_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Agree,
    Disagree,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub outcome: CheckOutcome,
    pub note: Option<String>,
}

impl Check {
    /// `Some(agree)`, or `None` for a skipped check.
    pub fn agree(&self) -> Option<bool> {
        match self.outcome {
            CheckOutcome::Agree => Some(true),
            CheckOutcome::Disagree => Some(false),
            CheckOutcome::Skipped => None,
        }
    }
}

/// One value per computation route; `None` where the route did not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodValues<T> {
    pub closed: Option<T>,
    pub expanded: Option<T>,
    pub apery: Option<T>,
    pub r_set: Option<T>,
    pub oracle: Option<T>,
}

impl<T> Default for MethodValues<T> {
    fn default() -> Self {
        MethodValues {
            closed: None,
            expanded: None,
            apery: None,
            r_set: None,
            oracle: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub instance: FamilyInstance,
    pub generators: Option<Vec<Natural>>,
    pub embedding_dimension: Option<u64>,
    pub frobenius: MethodValues<BigInt>,
    pub genus: MethodValues<Natural>,
    pub checks: Vec<Check>,
    /// Conjunction of every check that ran.
    pub overall: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.outcome == CheckOutcome::Disagree)
    }
}

struct Builder {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Builder {
    fn compare<T: PartialEq + Display>(&mut self, name: &str, expected: &T, actual: &T) -> bool {
        let agree = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            outcome: if agree {
                CheckOutcome::Agree
            } else {
                CheckOutcome::Disagree
            },
            note: None,
        });
        agree
    }

    fn compare_opt<T: PartialEq + Display>(
        &mut self,
        name: &str,
        expected: &Result<T>,
        actual: &Result<T>,
    ) -> Option<bool> {
        match (expected, actual) {
            (Ok(e), Ok(a)) => Some(self.compare(name, e, a)),
            (Err(e), _) | (_, Err(e)) => {
                self.skip(name, e.to_string());
                None
            }
        }
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            expected: String::new(),
            actual: String::new(),
            outcome: CheckOutcome::Skipped,
            note: Some(reason.into()),
        });
    }

    fn annotate_last(&mut self, note: impl Into<String>) {
        if let Some(c) = self.checks.last_mut() {
            c.note = Some(note.into());
        }
    }
}

fn err_string<T, E: Display>(r: &std::result::Result<T, E>) -> String {
    match r {
        Ok(_) => String::new(),
        Err(e) => e.to_string(),
    }
}

/// Runs every applicable cross-check on one instance.
///
/// Failures and resource limits become report entries; this never errors.
pub fn verify_instance(f: &FamilyInstance, limits: &Limits) -> VerificationReport {
    let mut out = Builder {
        checks: Vec::new(),
        notes: Vec::new(),
    };
    let mut frob = MethodValues::<BigInt>::default();
    let mut genus = MethodValues::<Natural>::default();

    let gens = family_generators(f, limits);
    let s0 = f.term(0, limits);
    let closed_f = closed_frobenius(f, limits);
    let closed_g = closed_genus(f, limits);
    let expanded_f = expanded_frobenius(f, limits);
    let max_closed = max_apery_closed(f, limits);
    frob.closed = closed_f.as_ref().ok().map(|v| BigInt::from(v.clone()));
    frob.expanded = expanded_f.as_ref().ok().cloned();
    genus.closed = closed_g.as_ref().ok().cloned();

    let engine: Result<AperyTable> = gens
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|g| apery_set(g, g.least(), limits));
    let r_table = apery_via_r(f, limits);
    let certified: Result<Certified> = gens
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|g| certify(g, closed_f.as_ref().ok(), limits));

    if let Ok(t) = &engine {
        frob.apery = Some(t.frobenius());
        genus.apery = t.genus().ok();
    }
    if let Ok(t) = &r_table {
        frob.r_set = Some(t.frobenius());
        genus.r_set = t.genus().ok();
    }
    if let Ok(c) = &certified {
        let r = report_from(c);
        frob.oracle = Some(r.frobenius);
        genus.oracle = Some(r.genus);
    }

    // (a) engine Apéry table against the sieve
    match (&gens, &engine, &certified, &s0) {
        (Ok(g), Ok(t), Ok(c), Ok(s0)) => match apery_from(g, c, s0, limits) {
            Ok(o) => {
                out.compare("apery.engine_vs_oracle", &ElementList(&o), &ElementList(t));
            }
            Err(e) => out.skip("apery.engine_vs_oracle", e.to_string()),
        },
        _ => out.skip(
            "apery.engine_vs_oracle",
            first_error(&[err_string(&engine), err_string(&certified)]),
        ),
    }

    // (b) table from the explicit description against the engine
    match (&r_table, &engine) {
        (Ok(r), Ok(t)) => {
            out.compare("apery.r_set_vs_engine", &ElementList(t), &ElementList(r));
        }
        _ => out.skip(
            "apery.r_set_vs_engine",
            first_error(&[err_string(&r_table), err_string(&engine)]),
        ),
    }

    // (c) Frobenius number
    let closed_int = closed_f
        .as_ref()
        .map(|v| BigInt::from(v.clone()))
        .map_err(Clone::clone);
    let engine_f = engine
        .as_ref()
        .map(AperyTable::frobenius)
        .map_err(Clone::clone);
    let oracle_f = certified
        .as_ref()
        .map(|c| report_from(c).frobenius)
        .map_err(Clone::clone);
    out.compare_opt("frobenius.closed_vs_engine", &closed_int, &engine_f);
    out.compare_opt("frobenius.engine_vs_oracle", &engine_f, &oracle_f);
    if out.compare_opt("frobenius.expanded_vs_closed", &closed_int, &expanded_f) == Some(false) {
        out.annotate_last(
            "expanded polynomial differs from the generator-form sum; the generator form is authoritative",
        );
    }
    let engine_max = engine
        .as_ref()
        .map(|t| t.max().clone())
        .map_err(Clone::clone);
    out.compare_opt("max_apery.closed_vs_engine", &max_closed, &engine_max);

    // (d) genus
    let engine_g = engine
        .as_ref()
        .map_err(Clone::clone)
        .and_then(AperyTable::genus);
    let oracle_g = certified
        .as_ref()
        .map(|c| report_from(c).genus)
        .map_err(Clone::clone);
    out.compare_opt("genus.closed_vs_engine", &closed_g, &engine_g);
    out.compare_opt("genus.engine_vs_oracle", &engine_g, &oracle_g);

    if f.kind() == FamilyKind::FermatBase {
        match (&gens, &closed_int, &closed_g) {
            (Ok(g), Ok(cf), Ok(cg)) => {
                match sylvester_two_gen(&g.as_slice()[0], &g.as_slice()[1]) {
                    Ok(r) => {
                        out.compare("frobenius.sylvester_vs_closed", cf, &r.frobenius);
                        out.compare("genus.sylvester_vs_closed", cg, &r.genus);
                    }
                    Err(e) => out.skip("sylvester", e.to_string()),
                }
            }
            _ => out.skip(
                "sylvester",
                first_error(&[err_string(&gens), err_string(&closed_g)]),
            ),
        }
    }

    // (e) embedding dimension and minimality
    let edim = embedding_dimension(f);
    let minimal = extended_generators(f, 1, limits).and_then(|g| minimal_system(&g, limits));
    match (&minimal, &gens) {
        (Ok(m), Ok(g)) => {
            if !out.compare("minimal_system.of_extended", &g.to_string(), &m.to_string()) {
                out.annotate_last("the next family term is not generated by the listed ones");
            }
            match &edim {
                Ok(e) => {
                    out.compare("embedding_dimension", e, &(m.len() as u64));
                }
                Err(e) => out.skip("embedding_dimension", e.to_string()),
            }
        }
        _ => {
            let why = first_error(&[err_string(&minimal), err_string(&gens)]);
            out.skip("minimal_system.of_extended", why.clone());
            out.skip("embedding_dimension", why);
        }
    }

    // (f) #R = s_0
    match (enumerate_r(f, limits), &s0) {
        (Ok(r), Ok(s0)) => {
            out.compare("r_set.cardinality", s0, &Natural::from(r.len()));
        }
        (Err(e), _) => out.skip("r_set.cardinality", e.to_string()),
        (_, Err(e)) => out.skip("r_set.cardinality", e.to_string()),
    }

    if f.kind() == FamilyKind::ThabitBase {
        thabit_checks(f, limits, &engine, &certified, &mut out);
    }

    if let Err(e) = &gens {
        out.notes.push(format!("generators unavailable: {e}"));
    }
    let overall = out
        .checks
        .iter()
        .all(|c| c.outcome != CheckOutcome::Disagree);
    VerificationReport {
        instance: *f,
        generators: gens.ok().map(|g| g.into_vec()),
        embedding_dimension: edim.ok(),
        frobenius: frob,
        genus,
        checks: out.checks,
        overall,
        notes: out.notes,
    }
}

/// Checks that only the Thabit base-`b` family claims: (g) counting lemmas,
/// push identities, (h) closure and shift, (i) position of the maximum and
/// the absence of `b s_(n+1)`.
fn thabit_checks(
    f: &FamilyInstance,
    limits: &Limits,
    engine: &Result<AperyTable>,
    certified: &Result<Certified>,
    out: &mut Builder,
) {
    let (b, n) = (f.b(), f.n());

    if n >= 2 {
        match enumerate_r(f, limits) {
            Ok(r) => {
                let mut total = 0u64;
                let mut wrong = Vec::new();
                for i in 1..=n + 1 {
                    for k in 1..=b {
                        total += 1;
                        let seen = r.iter().filter(|t| t.t(i as usize) == k).count();
                        match count_fixed_coefficient(b, n, i, k) {
                            Ok(c) if c == Natural::from(seen) => {}
                            Ok(c) => wrong.push(format!("(i={i},k={k}): {c} vs {seen}")),
                            Err(e) => wrong.push(format!("(i={i},k={k}): {e}")),
                        }
                    }
                }
                out.compare(
                    "counting_lemmas",
                    &format!("{total} counts match"),
                    &match wrong.len() {
                        0 => format!("{total} counts match"),
                        _ => format!("{} mismatches", wrong.len()),
                    },
                );
                if !wrong.is_empty() {
                    out.annotate_last(wrong.join("; "));
                }
            }
            Err(e) => out.skip("counting_lemmas", e.to_string()),
        }
    } else {
        out.skip("counting_lemmas", "counting lemmas are stated for n >= 2");
    }

    let mut total = 0u64;
    let mut failed = Vec::new();
    for j in 1..=n + 1 {
        let top = if j <= n { j } else { n + 1 };
        for i in 1..=top {
            total += 1;
            match coefficient_identity_check(b, n, i, j, limits) {
                Ok(true) => {}
                Ok(false) => failed.push(format!("(i={i},j={j})")),
                Err(e) => failed.push(format!("(i={i},j={j}): {e}")),
            }
        }
    }
    out.compare(
        "coefficient_identities",
        &format!("{total} identities hold"),
        &match failed.len() {
            0 => format!("{total} identities hold"),
            k => format!("{k} fail"),
        },
    );
    if !failed.is_empty() {
        out.annotate_last(failed.join("; "));
    }

    match (engine, certified) {
        (Ok(t), Ok(c)) => {
            let bound = c.frobenius.unwrap_or(0) + t.modulus() as u64;
            let members: Vec<u64> = c
                .sieve
                .members()
                .skip(1)
                .take_while(|&m| m <= bound)
                .collect();
            let stride = members.len().div_ceil(PROPERTY_SAMPLES).max(1);
            let sample: Vec<u64> = members.iter().copied().step_by(stride).collect();
            let bad_closure: Vec<u64> = sample
                .iter()
                .copied()
                .filter(|&m| !t.contains(&(Natural::from(m) * b + (b - 1))))
                .collect();
            out.compare(
                "closure.b_t_plus_b_minus_1",
                &format!("{} sampled elements", sample.len()),
                &format!("{} sampled elements", sample.len() - bad_closure.len()),
            );
            let s0 = t.modulus() as u64;
            let shifted: Vec<u64> = sample.iter().copied().filter(|m| m % s0 != 0).collect();
            let bad_shift = shifted
                .iter()
                .filter(|&&m| m < b - 1 || !t.contains(&Natural::from(m - (b - 1))))
                .count();
            out.compare(
                "shift.x_minus_b_minus_1",
                &format!("{} sampled elements", shifted.len()),
                &format!("{} sampled elements", shifted.len() - bad_shift),
            );
        }
        _ => {
            let why = first_error(&[err_string(engine), err_string(certified)]);
            out.skip("closure.b_t_plus_b_minus_1", why.clone());
            out.skip("shift.x_minus_b_minus_1", why);
        }
    }

    match engine {
        Ok(t) => {
            let s0 = t.modulus() as u64;
            let expected_pos = (s0 - (b - 1) % s0) % s0;
            out.compare("max_apery.position", &expected_pos, &(t.argmax() as u64));
            match f.term(n + 1, limits) {
                Ok(top) => {
                    let v = top * b;
                    let r = (&v % s0).to_usize().expect("residue below modulus");
                    let present = t.elements()[r] == v;
                    out.compare("apery.excludes_b_s_n_plus_1", &false, &present);
                }
                Err(e) => out.skip("apery.excludes_b_s_n_plus_1", e.to_string()),
            }
        }
        Err(e) => {
            out.skip("max_apery.position", e.to_string());
            out.skip("apery.excludes_b_s_n_plus_1", e.to_string());
        }
    }
}

fn first_error(errs: &[String]) -> String {
    errs.iter()
        .find(|e| !e.is_empty())
        .cloned()
        .unwrap_or_else(|| "prerequisite unavailable".into())
}

/// Compares tables by residue, prints as the sorted element list.
struct ElementList<'a>(&'a AperyTable);

impl PartialEq for ElementList<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Display for ElementList<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = self.0.sorted_elements();
        if v.len() > 16 {
            return write!(f, "{} elements, max {}", v.len(), self.0.max());
        }
        for (i, x) in v.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Verifies every instance in parallel; reports come back sorted by
/// (family, b, n).
pub fn verify_grid(instances: &[FamilyInstance], limits: &Limits) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = instances
        .par_iter()
        .map(|f| verify_instance(f, limits))
        .collect();
    reports.sort_by_key(|r| r.instance);
    reports
}
