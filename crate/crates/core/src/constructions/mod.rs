//! Builders for the code families and the concrete groups used throughout.

mod codes;
mod groups;

pub use codes::{all_code, inj, prod_code, rep, rep_l_code, singleton, w_code, CodeFamily};
pub use groups::{
    block_diagonal_group, block_element, diag_full_group, diag_group, full_aut_group, k2_group,
    section4_group, symmetric_gens,
};
