//! Support code for the `hnt` command-line tool.

pub mod claims;

pub use claims::{run_claims, ClaimOptions, ClaimOutcome, ClaimSuiteResult, Status};
