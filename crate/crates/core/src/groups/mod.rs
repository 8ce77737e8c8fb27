//! Automorphisms of `H(m,q)`, groups given by generators, enumeration,
//! stabilisers, block systems and structural tests on alphabet groups.

mod aut;
mod blocks;
mod enumerated;
pub(crate) mod gens;
mod perm;
mod permgroup;

pub use aut::{apply_aut, compose_aut, inverse_aut, mu, phi, AutElem};
pub use blocks::{invariant_partitions, EntryPartition};
pub(crate) use enumerated::{closure, stabilises};
pub use enumerated::{enumerate_group, kernel_on_entries, setwise_stabilizer, EnumeratedGroup};
pub use gens::{is_transitive_on, orbit, point_stabilizer, GroupGens, Orbit, Seed};
pub use perm::Perm;
pub use permgroup::{is_2_transitive, is_almost_simple, PermGroup};
