//! Round-robin relaxation over the residue classes modulo `x`.
//!
//! Adding a generator `a` with `r = a mod x` links class `i` to class
//! `(i + r) mod x` at cost `a`. These links split the classes into
//! `gcd(r, x)` cycles. On each cycle the current minimum can never be
//! improved, so one walk around the cycle starting from it brings every
//! class to its fixed point for `a`. Doing this once per generator gives the
//! shortest-path table in `O(#gens * x)` additions.

use std::ops::Add;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Natural;

pub(crate) trait Weight: Clone + Ord + for<'a> Add<&'a Self, Output = Self> {
    fn zero() -> Self;
    fn into_natural(self) -> Natural;
}

impl Weight for u128 {
    fn zero() -> Self {
        0
    }

    fn into_natural(self) -> Natural {
        Natural::from(self)
    }
}

impl Weight for Natural {
    fn zero() -> Self {
        Zero::zero()
    }

    fn into_natural(self) -> Natural {
        self
    }
}

/// Least known element per residue class; `None` is an unreached class.
#[derive(Debug, Clone)]
pub(crate) struct PartialTable<W> {
    cells: Vec<Option<W>>,
}

impl<W: Weight> PartialTable<W> {
    fn new(modulus: usize) -> Self {
        let mut cells = vec![None; modulus];
        cells[0] = Some(W::zero());
        PartialTable { cells }
    }

    fn relax(&mut self, gen: &W, step: usize) {
        let x = self.cells.len();
        if step == 0 {
            return;
        }
        let cycles = step.gcd(&x);
        let cycle_len = x / cycles;
        for start in 0..cycles {
            let mut best: Option<usize> = None;
            let mut r = start;
            for _ in 0..cycle_len {
                if let Some(v) = &self.cells[r] {
                    let better = match best {
                        None => true,
                        Some(b) => v < self.cells[b].as_ref().expect("best is filled"),
                    };
                    if better {
                        best = Some(r);
                    }
                }
                r = add_mod(r, step, x);
            }
            let Some(mut cur) = best else { continue };
            let mut carry = self.cells[cur].clone().expect("best is filled");
            for _ in 1..cycle_len {
                let next = add_mod(cur, step, x);
                let cand = carry + gen;
                carry = match &self.cells[next] {
                    Some(v) if *v <= cand => v.clone(),
                    _ => {
                        self.cells[next] = Some(cand.clone());
                        cand
                    }
                };
                cur = next;
            }
        }
    }
}

#[inline]
fn add_mod(a: usize, b: usize, n: usize) -> usize {
    let c = a + b;
    if c >= n {
        c - n
    } else {
        c
    }
}

/// Residue table with a native fast path.
///
/// When every generator fits in 64 bits, each shortest path has fewer than
/// `x` edges, so every entry is below `x * 2^64` and fits in a `u128`.
#[derive(Debug, Clone)]
pub(crate) enum Residues {
    Native(PartialTable<u128>),
    Big(PartialTable<Natural>),
}

impl Residues {
    pub(crate) fn new<'a, I>(modulus: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = &'a Natural>,
    {
        let native =
            modulus as u128 <= u64::MAX as u128 && gens.into_iter().all(|g| g.bits() <= 64);
        if native {
            Residues::Native(PartialTable::new(modulus))
        } else {
            Residues::Big(PartialTable::new(modulus))
        }
    }

    pub(crate) fn modulus(&self) -> usize {
        match self {
            Residues::Native(t) => t.cells.len(),
            Residues::Big(t) => t.cells.len(),
        }
    }

    fn residue_of(&self, m: &Natural) -> usize {
        (m % self.modulus())
            .to_usize()
            .expect("residue is below the modulus")
    }

    pub(crate) fn relax(&mut self, gen: &Natural) {
        let step = self.residue_of(gen);
        match self {
            Residues::Native(t) => {
                let g = gen
                    .to_u128()
                    .expect("native path only holds 64-bit generators");
                t.relax(&g, step)
            }
            Residues::Big(t) => t.relax(gen, step),
        }
    }

    /// True when `m` is a combination of the generators relaxed so far.
    pub(crate) fn represents(&self, m: &Natural) -> bool {
        let r = self.residue_of(m);
        match self {
            Residues::Native(t) => match (&t.cells[r], m.to_u128()) {
                (Some(v), Some(m)) => *v <= m,
                (Some(_), None) => true,
                (None, _) => false,
            },
            Residues::Big(t) => t.cells[r].as_ref().is_some_and(|v| v <= m),
        }
    }

    pub(crate) fn into_cells(self) -> Vec<Option<Natural>> {
        fn convert<W: Weight>(t: PartialTable<W>) -> Vec<Option<Natural>> {
            t.cells
                .into_iter()
                .map(|c| c.map(Weight::into_natural))
                .collect()
        }
        match self {
            Residues::Native(t) => convert(t),
            Residues::Big(t) => convert(t),
        }
    }
}
