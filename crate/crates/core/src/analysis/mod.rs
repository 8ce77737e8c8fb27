//! Projections, neighbour-transitivity checks, the projected-code
//! alternatives, Num witnesses for the standard families, code equivalence
//! and the small-scale classification and clique searches.

mod cases;
mod classify;
mod equivalence;
mod nt;
mod projection;
mod search;
mod table1;

pub use cases::{projection_case, ProjectionCase, ProjectionKind};
pub use classify::{
    classify_diagonal_2nt, classify_with, passes_oracle, Classification, Strategy,
    ALL_SUBSETS_MAX_VERTICES, SUBGROUP_ORBITS_MAX_ORDER,
};
pub use equivalence::{code_automorphisms, is_equivalent};
pub use nt::{
    analyze, analyze_with, is_alphabet_almost_simple_nt, is_completely_transitive,
    is_diagonally_nt, is_s_neighbour_transitive, LevelReport, NtReport,
};
pub use projection::{chi, chi_gens, chi_group, project_code, project_vertex};
pub use search::{desk_search, qualifies, DeskSearchReport};
pub use table1::{verify_table1_row, Table1Report, Table1Row};
