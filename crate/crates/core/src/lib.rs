//! Exact computation with codes in Hamming graphs `H(m,q)` and with
//! subgroups of `Aut(H(m,q)) = S_q wr S_m`.
//!
//! Vertices are tuples over `0..q`, stored as radix-`q` integers with entry
//! 0 least significant. Automorphisms act on the right.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod groups;
pub mod hamming;
pub mod io;
pub mod random;

pub use error::{HntError, Result};
pub use exec::Execution;

/// Limits on exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budgets {
    /// Vertices enumerated by distance partitions.
    pub vertices: u64,
    /// Elements listed by group enumeration.
    pub elements: u64,
    /// Nodes visited by backtracking searches.
    pub search_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            vertices: 10_000_000,
            elements: 1_000_000,
            search_nodes: 1_000_000,
        }
    }
}
