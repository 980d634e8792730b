//! Serializable report shapes.
//!
//! Every integer that can outgrow a machine word is carried as a decimal
//! string. Field order is fixed by the struct definitions, so parsing a
//! document and serializing it again gives back the same bytes.

use std::fmt::Write as _;

use frobenius_core::{MethodValues, VerificationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema_version: u32,
    pub command: String,
    pub instances: Vec<T>,
}

impl<T: Serialize> Document<T> {
    pub fn new(command: &str, instances: Vec<T>) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            instances,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodStrings {
    pub closed: Option<String>,
    pub expanded: Option<String>,
    pub apery: Option<String>,
    pub r_set: Option<String>,
    pub oracle: Option<String>,
}

impl MethodStrings {
    fn from_values<T: ToString>(v: &MethodValues<T>) -> Self {
        let s = |x: &Option<T>| x.as_ref().map(ToString::to_string);
        MethodStrings {
            closed: s(&v.closed),
            expanded: s(&v.expanded),
            apery: s(&v.apery),
            r_set: s(&v.r_set),
            oracle: s(&v.oracle),
        }
    }

    fn columns(&self) -> [&str; 5] {
        fn c(x: &Option<String>) -> &str {
            x.as_deref().unwrap_or("")
        }
        [
            c(&self.closed),
            c(&self.expanded),
            c(&self.apery),
            c(&self.r_set),
            c(&self.oracle),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// `null` when the check was skipped.
    pub agree: Option<bool>,
    pub expected: String,
    pub actual: String,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub family: String,
    pub b: u64,
    pub n: u64,
    pub generators: Vec<String>,
    pub embedding_dimension: Option<u64>,
    pub frobenius: MethodStrings,
    pub genus: MethodStrings,
    pub checks: Vec<CheckRecord>,
    pub overall: bool,
    pub notes: Vec<String>,
}

impl From<&VerificationReport> for InstanceRecord {
    fn from(r: &VerificationReport) -> Self {
        InstanceRecord {
            family: r.instance.kind().name().to_string(),
            b: r.instance.b(),
            n: r.instance.n(),
            generators: r
                .generators
                .iter()
                .flatten()
                .map(ToString::to_string)
                .collect(),
            embedding_dimension: r.embedding_dimension,
            frobenius: MethodStrings::from_values(&r.frobenius),
            genus: MethodStrings::from_values(&r.genus),
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord {
                    name: c.name.clone(),
                    agree: c.agree(),
                    expected: c.expected.clone(),
                    actual: c.actual.clone(),
                    note: c.note.clone(),
                })
                .collect(),
            overall: r.overall,
            notes: r.notes.clone(),
        }
    }
}

impl InstanceRecord {
    fn count(&self, agree: Option<bool>) -> usize {
        self.checks.iter().filter(|c| c.agree == agree).count()
    }
}

const VERIFY_HEADER: [&str; 19] = [
    "family",
    "b",
    "n",
    "generators",
    "embedding_dimension",
    "frobenius_closed",
    "frobenius_expanded",
    "frobenius_apery",
    "frobenius_r_set",
    "frobenius_oracle",
    "genus_closed",
    "genus_expanded",
    "genus_apery",
    "genus_r_set",
    "genus_oracle",
    "checks_agree",
    "checks_disagree",
    "checks_skipped",
    "overall",
];

pub fn verify_csv(rows: &[InstanceRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(VERIFY_HEADER).expect("in-memory write");
    for r in sorted(rows) {
        let mut rec = vec![
            r.family.clone(),
            r.b.to_string(),
            r.n.to_string(),
            r.generators.join(" "),
            r.embedding_dimension
                .map(|e| e.to_string())
                .unwrap_or_default(),
        ];
        rec.extend(r.frobenius.columns().map(String::from));
        rec.extend(r.genus.columns().map(String::from));
        rec.push(r.count(Some(true)).to_string());
        rec.push(r.count(Some(false)).to_string());
        rec.push(r.count(None).to_string());
        rec.push(r.overall.to_string());
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

pub fn verify_text(rows: &[InstanceRecord]) -> String {
    let mut out = String::new();
    for r in sorted(rows) {
        let status = if r.overall { "ok" } else { "DISAGREE" };
        let _ = writeln!(
            out,
            "{}(b={}, n={}): {status}  F={}  g={}  [{} agree, {} disagree, {} skipped]",
            r.family,
            r.b,
            r.n,
            best(&r.frobenius),
            best(&r.genus),
            r.count(Some(true)),
            r.count(Some(false)),
            r.count(None),
        );
        for c in r.checks.iter().filter(|c| c.agree == Some(false)) {
            let _ = writeln!(
                out,
                "  {}: expected {}, got {}",
                c.name, c.expected, c.actual
            );
            if let Some(note) = &c.note {
                let _ = writeln!(out, "    {note}");
            }
        }
    }
    out
}

fn best(m: &MethodStrings) -> &str {
    [&m.closed, &m.apery, &m.oracle, &m.r_set]
        .into_iter()
        .find_map(|v| v.as_deref())
        .unwrap_or("?")
}

/// A `table` row: closed-form values plus whichever cross-checks ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub family: String,
    pub b: u64,
    pub n: u64,
    pub generators: Vec<String>,
    pub embedding_dimension: Option<u64>,
    pub frobenius: Option<String>,
    pub genus: Option<String>,
    pub agreements: Vec<Agreement>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub method: String,
    pub agree: Option<bool>,
    pub note: Option<String>,
}

impl TableRecord {
    pub fn disagrees(&self) -> bool {
        self.agreements.iter().any(|a| a.agree == Some(false))
    }

    fn agreement_summary(&self) -> String {
        self.agreements
            .iter()
            .map(|a| {
                let v = match a.agree {
                    Some(true) => "agree",
                    Some(false) => "disagree",
                    None => "skipped",
                };
                format!("{}={v}", a.method)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

const TABLE_HEADER: [&str; 9] = [
    "family",
    "b",
    "n",
    "generators",
    "embedding_dimension",
    "frobenius",
    "genus",
    "agreements",
    "error",
];

pub fn table_csv(rows: &[TableRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE_HEADER).expect("in-memory write");
    for r in sorted_by(rows, |r| (r.family.clone(), r.b, r.n)) {
        w.write_record([
            r.family.clone(),
            r.b.to_string(),
            r.n.to_string(),
            r.generators.join(" "),
            r.embedding_dimension
                .map(|e| e.to_string())
                .unwrap_or_default(),
            r.frobenius.clone().unwrap_or_default(),
            r.genus.clone().unwrap_or_default(),
            r.agreement_summary(),
            r.error.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

pub fn table_text(rows: &[TableRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<20} {:>4} {:>4} {:>4}  {:>24} {:>24}  checks",
        "family", "b", "n", "e", "F", "g"
    );
    for r in sorted_by(rows, |r| (r.family.clone(), r.b, r.n)) {
        let e = r
            .embedding_dimension
            .map(|e| e.to_string())
            .unwrap_or_else(|| "-".into());
        let tail = match &r.error {
            Some(err) => format!("error: {err}"),
            None => r.agreement_summary(),
        };
        let _ = writeln!(
            out,
            "{:<20} {:>4} {:>4} {:>4}  {:>24} {:>24}  {tail}",
            r.family,
            r.b,
            r.n,
            e,
            r.frobenius.as_deref().unwrap_or("-"),
            r.genus.as_deref().unwrap_or("-"),
        );
    }
    out
}

fn sorted(rows: &[InstanceRecord]) -> Vec<&InstanceRecord> {
    sorted_by(rows, |r| (r.family.clone(), r.b, r.n))
}

fn sorted_by<T, K: Ord>(rows: &[T], key: impl Fn(&T) -> K) -> Vec<&T> {
    let mut v: Vec<&T> = rows.iter().collect();
    v.sort_by_key(|r| key(r));
    v
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
