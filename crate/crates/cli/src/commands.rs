//! Subcommand bodies. Each returns the rendered output plus a flag that
//! is set when two methods disagreed.

use std::fmt::Write as _;

use frobenius_core::{
    apery_set, apery_via_r, closed_frobenius, closed_genus, embedding_dimension, family_generators,
    minimal_system, oracle_frobenius_genus, sylvester_two_gen, verify_grid, FamilyInstance,
    GeneratorSet, Limits, Natural,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::args::{Format, GridArgs, Method, ValueArgs};
use crate::report::{
    table_csv, table_text, verify_csv, verify_text, Agreement, Document, InstanceRecord,
    TableRecord, SCHEMA_VERSION,
};

/// Above this multiplicity the default `closed` method skips its
/// cross-check against the engine.
pub const CONSISTENCY_LIMIT: u64 = 100_000;

pub struct Output {
    pub body: String,
    pub disagreement: bool,
}

impl Output {
    fn clean(body: String) -> Self {
        Output {
            body,
            disagreement: false,
        }
    }
}

pub type CmdResult = Result<Output, String>;

fn strings<'a>(v: impl IntoIterator<Item = &'a Natural>) -> Vec<String> {
    v.into_iter().map(ToString::to_string).collect()
}

fn csv_rows<const N: usize>(
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
struct AperyDoc {
    schema_version: u32,
    command: String,
    generators: Vec<String>,
    modulus: String,
    elements: Vec<String>,
    by_residue: Vec<String>,
    frobenius: String,
    genus: String,
}

pub fn apery(
    gens: &GeneratorSet,
    x: Option<&Natural>,
    format: Format,
    limits: &Limits,
) -> CmdResult {
    let x = x.unwrap_or(gens.least());
    let t = apery_set(gens, x, limits).map_err(|e| e.to_string())?;
    let sorted = strings(&t.sorted_elements());
    let body = match format {
        Format::Text => format!("{}\n", sorted.join(",")),
        Format::Json => json(&AperyDoc {
            schema_version: SCHEMA_VERSION,
            command: "apery".into(),
            generators: strings(gens),
            modulus: x.to_string(),
            elements: sorted,
            by_residue: strings(t.elements()),
            frobenius: t.frobenius().to_string(),
            genus: t.genus().map_err(|e| e.to_string())?.to_string(),
        }),
        Format::Csv => csv_rows(
            ["residue", "element"],
            t.elements()
                .iter()
                .enumerate()
                .map(|(i, w)| [i.to_string(), w.to_string()]),
        ),
    };
    Ok(Output::clean(body))
}

#[derive(Debug, Serialize, Deserialize)]
struct GapsDoc {
    schema_version: u32,
    command: String,
    generators: Vec<String>,
    frobenius: String,
    genus: String,
    gaps: Vec<String>,
}

pub fn gaps(gens: &GeneratorSet, format: Format, limits: &Limits) -> CmdResult {
    let t = apery_set(gens, gens.least(), limits).map_err(|e| e.to_string())?;
    let report = t.gaps(limits).map_err(|e| e.to_string())?;
    let list = strings(report.gaps.iter().flatten());
    let body = match format {
        Format::Text => format!("{}\n", list.join(",")),
        Format::Json => json(&GapsDoc {
            schema_version: SCHEMA_VERSION,
            command: "gaps".into(),
            generators: strings(gens),
            frobenius: report.frobenius.to_string(),
            genus: report.genus.to_string(),
            gaps: list,
        }),
        Format::Csv => csv_rows(["gap"], list.into_iter().map(|g| [g])),
    };
    Ok(Output::clean(body))
}

#[derive(Debug, Serialize, Deserialize)]
struct MinimalDoc {
    schema_version: u32,
    command: String,
    generators: Vec<String>,
    minimal: Vec<String>,
    embedding_dimension: usize,
}

pub fn minimal(gens: &GeneratorSet, format: Format, limits: &Limits) -> CmdResult {
    let m = minimal_system(gens, limits).map_err(|e| e.to_string())?;
    let list = strings(&m);
    let body = match format {
        Format::Text => format!("{}\n", list.join(",")),
        Format::Json => json(&MinimalDoc {
            schema_version: SCHEMA_VERSION,
            command: "minimal".into(),
            generators: strings(gens),
            embedding_dimension: list.len(),
            minimal: list,
        }),
        Format::Csv => csv_rows(["generator"], list.into_iter().map(|g| [g])),
    };
    Ok(Output::clean(body))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Frobenius,
    Genus,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Frobenius => "frobenius",
            Quantity::Genus => "genus",
        }
    }
}

enum Source {
    Family(FamilyInstance, GeneratorSet),
    Gens(GeneratorSet),
}

impl Source {
    fn gens(&self) -> &GeneratorSet {
        match self {
            Source::Family(_, g) | Source::Gens(g) => g,
        }
    }
}

fn pick(q: Quantity, r: frobenius_core::GapReport) -> BigInt {
    match q {
        Quantity::Frobenius => r.frobenius,
        Quantity::Genus => r.genus.into(),
    }
}

fn evaluate(src: &Source, q: Quantity, m: Method, limits: &Limits) -> Result<BigInt, String> {
    let e = |e: frobenius_core::Error| e.to_string();
    let gens = src.gens();
    match (m, src) {
        (Method::Closed, Source::Family(f, _)) => match q {
            Quantity::Frobenius => closed_frobenius(f, limits).map(BigInt::from).map_err(e),
            Quantity::Genus => closed_genus(f, limits).map(BigInt::from).map_err(e),
        },
        (Method::Closed, Source::Gens(g)) => match g.as_slice() {
            [a, m] => sylvester_two_gen(a, m).map(|r| pick(q, r)).map_err(e),
            _ => Err("the closed form needs --family or exactly two generators".into()),
        },
        (Method::Apery, _) => {
            let t = apery_set(gens, gens.least(), limits).map_err(e)?;
            Ok(pick(q, t.summary().map_err(e)?))
        }
        (Method::RSet, Source::Family(f, _)) => {
            let t = apery_via_r(f, limits).map_err(e)?;
            Ok(pick(q, t.summary().map_err(e)?))
        }
        (Method::RSet, Source::Gens(_)) => Err("the r-set method needs --family".into()),
        (Method::Oracle, _) => {
            // Only sizes the sieve; the oracle certifies its own answer.
            let hint = match src {
                Source::Family(f, _) => closed_frobenius(f, limits).ok(),
                Source::Gens(g) => Some(g.least() * g.as_slice().last().expect("nonempty")),
            };
            oracle_frobenius_genus(gens, hint.as_ref(), limits)
                .map(|r| pick(q, r))
                .map_err(e)
        }
        (Method::All, _) => unreachable!("expanded by the caller"),
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MethodRecord {
    method: String,
    value: Option<String>,
    error: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ValueDoc {
    schema_version: u32,
    command: String,
    family: Option<String>,
    b: Option<u64>,
    n: Option<u64>,
    generators: Vec<String>,
    value: Option<String>,
    methods: Vec<MethodRecord>,
    agree: bool,
}

pub fn value(args: &ValueArgs, q: Quantity, format: Format, limits: &Limits) -> CmdResult {
    let src = match (&args.gens, args.family) {
        (Some(g), _) => Source::Gens(g.clone()),
        (None, Some(kind)) => {
            let (b, n) = (
                args.b.expect("clap requires b"),
                args.n.expect("clap requires n"),
            );
            let f = FamilyInstance::new(kind, b, n).map_err(|e| e.to_string())?;
            let g = family_generators(&f, limits).map_err(|e| format!("{f}: {e}"))?;
            Source::Family(f, g)
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let primary = args.method.unwrap_or(match src {
        Source::Family(..) => Method::Closed,
        Source::Gens(_) => Method::Apery,
    });
    let mut methods = match primary {
        Method::All => Method::SINGLE.to_vec(),
        m => vec![m],
    };
    let quick_check = matches!(src, Source::Family(..))
        && args.method.is_none()
        && *src.gens().least() <= Natural::from(CONSISTENCY_LIMIT);
    if quick_check {
        methods.push(Method::Apery);
    }

    let results: Vec<(Method, Result<BigInt, String>)> = methods
        .iter()
        .map(|&m| (m, evaluate(&src, q, m, limits)))
        .collect();
    if let [(_, Err(msg))] = results.as_slice() {
        return Err(msg.clone());
    }
    if primary != Method::All {
        if let Err(msg) = &results[0].1 {
            return Err(msg.clone());
        }
    }
    let values: Vec<&BigInt> = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let shown = values.first().map(|v| v.to_string());

    let body = match format {
        Format::Text => {
            let mut out = format!("{}\n", shown.as_deref().unwrap_or("no method succeeded"));
            if primary == Method::All {
                for (m, r) in &results {
                    match r {
                        Ok(v) => writeln!(out, "  {:<7} {v}", m.name()),
                        Err(msg) => writeln!(out, "  {:<7} error: {msg}", m.name()),
                    }
                    .expect("string write");
                }
                let verdict = if agree { "agree" } else { "DISAGREE" };
                writeln!(
                    out,
                    "{} of {} methods succeeded and {verdict}",
                    values.len(),
                    results.len()
                )
                .expect("string write");
            }
            out
        }
        Format::Json => {
            let (family, b, n) = match &src {
                Source::Family(f, _) => {
                    (Some(f.kind().name().to_string()), Some(f.b()), Some(f.n()))
                }
                Source::Gens(_) => (None, None, None),
            };
            json(&ValueDoc {
                schema_version: SCHEMA_VERSION,
                command: q.name().into(),
                family,
                b,
                n,
                generators: strings(src.gens()),
                value: shown,
                methods: results
                    .iter()
                    .map(|(m, r)| MethodRecord {
                        method: m.name().into(),
                        value: r.as_ref().ok().map(ToString::to_string),
                        error: r.as_ref().err().cloned(),
                    })
                    .collect(),
                agree,
            })
        }
        Format::Csv => csv_rows(
            ["method", "value", "error"],
            results.iter().map(|(m, r)| {
                let (v, e) = match r {
                    Ok(v) => (v.to_string(), String::new()),
                    Err(msg) => (String::new(), msg.clone()),
                };
                [m.name().to_string(), v, e]
            }),
        ),
    };
    Ok(Output {
        body,
        disagreement: !agree,
    })
}

/// Expands a grid, dropping points outside a family's domain.
pub fn instances(args: &GridArgs) -> Result<Vec<FamilyInstance>, String> {
    let mut out = Vec::new();
    for &kind in &args.family.0 {
        for &b in &args.b.0 {
            for &n in &args.n.0 {
                if let Ok(f) = FamilyInstance::new(kind, b, n) {
                    out.push(f);
                }
            }
        }
    }
    if out.is_empty() {
        return Err("no grid point lies in the domain of the selected families".into());
    }
    out.sort();
    Ok(out)
}

fn table_row(f: &FamilyInstance, limits: &Limits) -> TableRecord {
    let mut row = TableRecord {
        family: f.kind().name().to_string(),
        b: f.b(),
        n: f.n(),
        generators: Vec::new(),
        embedding_dimension: embedding_dimension(f).ok(),
        frobenius: None,
        genus: None,
        agreements: Vec::new(),
        error: None,
    };
    let computed = (|| {
        let g = family_generators(f, limits)?;
        row.generators = strings(&g);
        let frob = closed_frobenius(f, limits)?;
        let genus = closed_genus(f, limits)?;
        row.frobenius = Some(frob.to_string());
        row.genus = Some(genus.to_string());
        let check = if *g.least() > Natural::from(CONSISTENCY_LIMIT) {
            Agreement {
                method: "apery".into(),
                agree: None,
                note: Some(format!("multiplicity above {CONSISTENCY_LIMIT}")),
            }
        } else {
            match apery_set(&g, g.least(), limits).and_then(|t| t.summary()) {
                Ok(r) => {
                    let ok = r.frobenius == BigInt::from(frob) && r.genus == genus;
                    Agreement {
                        method: "apery".into(),
                        agree: Some(ok),
                        note: (!ok)
                            .then(|| format!("engine gives F={}, g={}", r.frobenius, r.genus)),
                    }
                }
                Err(e) => Agreement {
                    method: "apery".into(),
                    agree: None,
                    note: Some(e.to_string()),
                },
            }
        };
        row.agreements.push(check);
        Ok::<_, frobenius_core::Error>(())
    })();
    if let Err(e) = computed {
        row.error = Some(e.to_string());
    }
    row
}

pub fn table(args: &GridArgs, format: Format, limits: &Limits) -> CmdResult {
    let rows: Vec<TableRecord> = instances(args)?
        .iter()
        .map(|f| table_row(f, limits))
        .collect();
    let disagreement = rows.iter().any(TableRecord::disagrees);
    let body = match format {
        Format::Text => table_text(&rows),
        Format::Json => Document::new("table", rows).to_json(),
        Format::Csv => table_csv(&rows),
    };
    Ok(Output { body, disagreement })
}

pub fn verify(args: &GridArgs, format: Format, limits: &Limits) -> CmdResult {
    let grid = instances(args)?;
    let records: Vec<InstanceRecord> = verify_grid(&grid, limits)
        .iter()
        .map(InstanceRecord::from)
        .collect();
    let disagreement = records.iter().any(|r| !r.overall);
    let body = match format {
        Format::Text => verify_text(&records),
        Format::Json => Document::new("verify", records).to_json(),
        Format::Csv => verify_csv(&records),
    };
    Ok(Output { body, disagreement })
}
