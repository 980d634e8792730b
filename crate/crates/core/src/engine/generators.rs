use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Natural;
use crate::error::{Error, Result};

/// A validated system of generators: nonempty, strictly ascending, no zero,
/// gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<Natural>,
}

impl GeneratorSet {
    /// Sorts, deduplicates and validates `raw`.
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Natural>,
    {
        let mut gens: Vec<Natural> = raw.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.iter().any(Zero::is_zero) {
            return Err(Error::ZeroGenerator);
        }
        gens.sort();
        gens.dedup();
        let gcd = gens.iter().fold(Natural::zero(), |acc, g| acc.gcd(g));
        if !gcd.is_one() {
            return Err(Error::GcdNotOne { gcd });
        }
        Ok(GeneratorSet { gens })
    }

    pub fn from_u64s(raw: &[u64]) -> Result<Self> {
        Self::new(raw.iter().map(|&g| Natural::from(g)))
    }

    /// Wraps an already ascending, gcd-1 list without re-validating it.
    pub(crate) fn from_sorted_unchecked(gens: Vec<Natural>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        GeneratorSet { gens }
    }

    /// The multiplicity candidate: the least generator.
    pub fn least(&self) -> &Natural {
        &self.gens[0]
    }

    pub fn as_slice(&self) -> &[Natural] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Natural> {
        self.gens.iter()
    }

    pub fn contains_generator(&self, g: &Natural) -> bool {
        self.gens.binary_search(g).is_ok()
    }

    pub fn into_vec(self) -> Vec<Natural> {
        self.gens
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a Natural;
    type IntoIter = std::slice::Iter<'a, Natural>;

    fn into_iter(self) -> Self::IntoIter {
        self.gens.iter()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;

    /// Parses a comma- or whitespace-separated list of decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Natural>()
                    .map_err(|_| Error::ParamDomain(format!("`{t}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(raw)
    }
}
