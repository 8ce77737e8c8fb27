use std::cmp::Ordering;
use std::fmt;

use crate::error::{HntError, Result};
use crate::hamming::{GraphParams, Symbol};

/// A vertex of `H(m,q)`: an `m`-tuple over `0..q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    params: GraphParams,
    symbols: Box<[Symbol]>,
}

impl Vertex {
    pub fn new(params: GraphParams, symbols: impl Into<Vec<Symbol>>) -> Result<Self> {
        let symbols = symbols.into();
        if symbols.len() != params.m() {
            return Err(HntError::param(format!(
                "vertex has {} entries, expected {}",
                symbols.len(),
                params.m()
            )));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= params.q()) {
            return Err(HntError::param(format!(
                "symbol {s} out of range for q={}",
                params.q()
            )));
        }
        Ok(Vertex {
            params,
            symbols: symbols.into_boxed_slice(),
        })
    }

    /// The constant vertex `(a,...,a)`.
    pub fn constant(params: GraphParams, a: Symbol) -> Result<Self> {
        Vertex::new(params, vec![a; params.m()])
    }

    pub fn from_index(params: GraphParams, index: u64) -> Result<Self> {
        if index >= params.vertex_count() {
            return Err(HntError::param(format!(
                "vertex index {index} out of range for {params}"
            )));
        }
        Ok(Self::from_index_unchecked(params, index))
    }

    pub(crate) fn from_index_unchecked(params: GraphParams, index: u64) -> Self {
        Vertex {
            params,
            symbols: params.decode(index).into_boxed_slice(),
        }
    }

    pub(crate) fn from_symbols_unchecked(params: GraphParams, symbols: Vec<Symbol>) -> Self {
        debug_assert_eq!(symbols.len(), params.m());
        Vertex {
            params,
            symbols: symbols.into_boxed_slice(),
        }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn get(&self, entry: usize) -> Symbol {
        self.symbols[entry]
    }

    /// Radix-`q` index of this vertex.
    pub fn index(&self) -> u64 {
        self.params.encode(&self.symbols)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.params
            .cmp(&other.params)
            .then_with(|| self.index().cmp(&other.index()))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&str_tuple(&self.symbols))
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn str_tuple(symbols: &[Symbol]) -> String {
    let parts: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(","))
}
