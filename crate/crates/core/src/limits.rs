/// Resource caps shared by every computation.
///
/// Exceeding a cap is always an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of cells a membership sieve may allocate.
    pub max_sieve_cells: u64,
    /// Largest modulus for a residue (Apéry) table.
    pub max_residues: u64,
    /// Largest bit length of a single family term.
    pub max_value_bits: u64,
    /// Largest number of coefficient sequences an enumeration may produce.
    pub max_enumeration: u64,
}

impl Limits {
    pub const DEFAULT_SIEVE_CELLS: u64 = 100_000_000;
    pub const DEFAULT_RESIDUES: u64 = 1 << 24;
    pub const DEFAULT_VALUE_BITS: u64 = 1 << 20;
    pub const DEFAULT_ENUMERATION: u64 = 10_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sieve_cells: Self::DEFAULT_SIEVE_CELLS,
            max_residues: Self::DEFAULT_RESIDUES,
            max_value_bits: Self::DEFAULT_VALUE_BITS,
            max_enumeration: Self::DEFAULT_ENUMERATION,
        }
    }
}
