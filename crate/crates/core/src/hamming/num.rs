use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{HntError, Result};
use crate::hamming::{GraphParams, Symbol, Vertex};

/// Occurrence count of each symbol present in `v`; absent symbols are omitted.
pub fn composition(v: &Vertex) -> BTreeMap<Symbol, usize> {
    let mut counts = BTreeMap::new();
    for &s in v.symbols() {
        *counts.entry(s).or_insert(0) += 1;
    }
    counts
}

/// The multiplicity profile of a vertex: `(p, s)` means exactly `s`
/// distinct symbols each occur `p` times.
///
/// This is invariant under the diagonal group `Diag_m(S_q) ⋊ S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NumProfile {
    // multiplicity p -> number of symbols s with that multiplicity
    pairs: BTreeMap<usize, usize>,
}

impl NumProfile {
    pub fn of(v: &Vertex) -> Self {
        let mut pairs = BTreeMap::new();
        for count in composition(v).into_values() {
            *pairs.entry(count).or_insert(0) += 1;
        }
        NumProfile { pairs }
    }

    /// Validates `sum p*s = m`, distinct positive `p`, positive `s` and
    /// `sum s <= q`.
    pub fn from_pairs(params: GraphParams, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(p, s) in pairs {
            if p == 0 || s == 0 {
                return Err(HntError::param(format!(
                    "profile pair ({p},{s}) must be positive"
                )));
            }
            if map.insert(p, s).is_some() {
                return Err(HntError::param(format!("multiplicity {p} repeated")));
            }
        }
        let total: usize = map.iter().map(|(p, s)| p * s).sum();
        let symbols: usize = map.values().sum();
        if total != params.m() {
            return Err(HntError::param(format!(
                "profile covers {total} entries, expected {}",
                params.m()
            )));
        }
        if symbols > params.q() {
            return Err(HntError::param(format!(
                "profile uses {symbols} symbols, alphabet has {}",
                params.q()
            )));
        }
        Ok(NumProfile { pairs: map })
    }

    /// Pairs `(p, s)` in decreasing order of multiplicity.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().rev().map(|(&p, &s)| (p, s)).collect()
    }

    pub fn symbols_used(&self) -> usize {
        self.pairs.values().sum()
    }
}

pub fn num_profile(v: &Vertex) -> NumProfile {
    NumProfile::of(v)
}

impl fmt::Display for NumProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(p, s)| format!("({p},{s})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for NumProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
