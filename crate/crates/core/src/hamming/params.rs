use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HntError, Result};

/// Alphabet symbol; the alphabet of `H(m,q)` is `0..q`.
pub type Symbol = u32;

/// Largest vertex count a [`GraphParams`] may describe.
pub const MAX_VERTEX_COUNT: u64 = 1 << 62;

/// The pair `(m, q)` naming the Hamming graph `H(m,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphParams {
    m: usize,
    q: usize,
}

impl GraphParams {
    /// Requires `m >= 1`, `q >= 2` and `q^m <= 2^62`.
    pub fn new(m: usize, q: usize) -> Result<Self> {
        if m == 0 {
            return Err(HntError::param("m must be at least 1"));
        }
        if q < 2 {
            return Err(HntError::param("q must be at least 2"));
        }
        if q > Symbol::MAX as usize {
            return Err(HntError::param(format!("alphabet size {q} is too large")));
        }
        let count = u32::try_from(m)
            .ok()
            .and_then(|m| (q as u64).checked_pow(m))
            .filter(|&c| c <= MAX_VERTEX_COUNT);
        if count.is_none() {
            return Err(HntError::param(format!("q^m = {q}^{m} exceeds 2^62")));
        }
        Ok(GraphParams { m, q })
    }

    /// Number of entries.
    pub fn m(self) -> usize {
        self.m
    }

    /// Alphabet size.
    pub fn q(self) -> usize {
        self.q
    }

    pub fn vertex_count(self) -> u64 {
        (self.q as u64).pow(self.m as u32)
    }

    /// `q^i`, the radix weight of entry `i`.
    pub fn weight(self, i: usize) -> u64 {
        (self.q as u64).pow(i as u32)
    }

    /// Radix-`q` index `sum_i symbols[i] * q^i`.
    pub(crate) fn encode(self, symbols: &[Symbol]) -> u64 {
        let q = self.q as u64;
        symbols
            .iter()
            .rev()
            .fold(0u64, |acc, &s| acc * q + s as u64)
    }

    pub(crate) fn decode_into(self, mut index: u64, out: &mut [Symbol]) {
        let q = self.q as u64;
        for slot in out.iter_mut().take(self.m) {
            *slot = (index % q) as Symbol;
            index /= q;
        }
    }

    pub(crate) fn decode(self, index: u64) -> Vec<Symbol> {
        let mut out = vec![0; self.m];
        self.decode_into(index, &mut out);
        out
    }

    pub(crate) fn ensure_same(self, other: GraphParams) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(HntError::ParamMismatch(
                format!("{},{}", self.m, self.q),
                format!("{},{}", other.m, other.q),
            ))
        }
    }

    pub(crate) fn ensure_vertex_budget(self, budget: u64) -> Result<()> {
        let needed = self.vertex_count();
        if needed > budget {
            Err(HntError::Budget {
                what: "vertex enumeration",
                budget,
                needed,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.m, self.q)
    }
}
