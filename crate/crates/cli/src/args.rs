//! Command-line definitions.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobenius_core::{FamilyKind, GeneratorSet, Limits};

#[derive(Debug, Parser)]
#[command(
    name = "frobenius",
    version,
    about = "Frobenius numbers, genera and Apéry sets of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Exit with status 2 when any two methods disagree.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Largest sieve the oracle may allocate, in cells.
    #[arg(long, global = true, env = "NS_MAX_SIEVE_CELLS", default_value_t = Limits::DEFAULT_SIEVE_CELLS,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_sieve_cells: u64,

    /// Largest Apéry modulus the engine may tabulate.
    #[arg(long, global = true, env = "NS_MAX_RESIDUES", default_value_t = Limits::DEFAULT_RESIDUES,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_residues: u64,

    /// Largest bit length of any intermediate value.
    #[arg(long, global = true, env = "NS_MAX_VALUE_BITS", default_value_t = Limits::DEFAULT_VALUE_BITS,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_value_bits: u64,

    /// Largest coefficient-sequence enumeration.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ENUMERATION,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_enumeration: u64,
}

impl Common {
    pub fn limits(&self) -> Limits {
        Limits {
            max_sieve_cells: self.max_sieve_cells,
            max_residues: self.max_residues,
            max_value_bits: self.max_value_bits,
            max_enumeration: self.max_enumeration,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Apery,
    RSet,
    Oracle,
    All,
}

impl Method {
    pub const SINGLE: [Method; 4] = [Method::Closed, Method::Apery, Method::RSet, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Apery => "apery",
            Method::RSet => "r-set",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apéry set of the generated semigroup with respect to one of its elements.
    Apery {
        #[arg(long)]
        gens: GeneratorSet,
        /// Nonzero element of the semigroup; defaults to the least generator.
        #[arg(long)]
        x: Option<num_bigint::BigUint>,
    },
    /// Frobenius number of a generator list or a family instance.
    Frobenius(ValueArgs),
    /// Genus (number of gaps) of a generator list or a family instance.
    Genus(ValueArgs),
    /// Lists every gap.
    Gaps {
        #[arg(long)]
        gens: GeneratorSet,
    },
    /// Minimal system of generators.
    Minimal {
        #[arg(long)]
        gens: GeneratorSet,
    },
    /// One row of closed-form values per family instance.
    Table(GridArgs),
    /// Cross-checks every method on each family instance.
    Verify(GridArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["gens", "family"])))]
pub struct ValueArgs {
    #[arg(long)]
    pub gens: Option<GeneratorSet>,

    #[arg(long, requires_all = ["b", "n"])]
    pub family: Option<FamilyKind>,

    #[arg(long, requires = "family")]
    pub b: Option<u64>,

    #[arg(long, requires = "family")]
    pub n: Option<u64>,

    /// Defaults to `closed` for a family and `apery` for a generator list.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// A family name or `all`.
    #[arg(long)]
    pub family: FamilySelector,

    /// Bases, as `2..4`, `2,3,5` or a mix.
    #[arg(long)]
    pub b: NumberRange,

    #[arg(long)]
    pub n: NumberRange,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySelector(pub Vec<FamilyKind>);

impl FromStr for FamilySelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(FamilySelector(FamilyKind::ALL.to_vec()));
        }
        let mut kinds = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            kinds.push(part.parse::<FamilyKind>().map_err(|e| e.to_string())?);
        }
        if kinds.is_empty() {
            return Err("empty family list".into());
        }
        kinds.sort();
        kinds.dedup();
        Ok(FamilySelector(kinds))
    }
}

/// Sorted, deduplicated set of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberRange(pub Vec<u64>);

/// Refuse ranges that would expand into absurd grids.
const MAX_RANGE_LEN: u64 = 1 << 16;

impl FromStr for NumberRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{}` is not a nonnegative integer", t.trim()))
        };
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some((lo, hi)) = part.split_once("..") {
                let lo = num(lo)?;
                let hi = num(hi.strip_prefix('=').unwrap_or(hi))?;
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                if hi - lo >= MAX_RANGE_LEN {
                    return Err(format!("range `{part}` is longer than {MAX_RANGE_LEN}"));
                }
                out.extend(lo..=hi);
            } else {
                out.push(num(part)?);
            }
        }
        if out.is_empty() {
            return Err("empty range".into());
        }
        out.sort_unstable();
        out.dedup();
        Ok(NumberRange(out))
    }
}
