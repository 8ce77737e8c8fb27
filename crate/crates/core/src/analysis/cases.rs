use serde::{Deserialize, Serialize};

use crate::analysis::nt::report_from_partition;
use crate::analysis::projection::{chi_gens, project_code};
use crate::error::{HntError, Result};
use crate::exec::Execution;
use crate::groups::{EntryPartition, GroupGens};
use crate::hamming::{distance_partition, min_distance, Code};
use crate::Budgets;

/// Which alternative holds for the projection onto one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionKind {
    /// `pi_J(C)` is every vertex of `H(|J|,q)`.
    CompleteCode,
    /// `pi_J(C)` has covering radius 1.
    RadiusOneNT,
    /// `pi_J(C)` has covering radius at least 2.
    TwoNT,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionCase {
    pub block: Vec<usize>,
    pub kind: ProjectionKind,
    pub projected_size: usize,
    /// `None` when the projection is a single vertex.
    pub delta: Option<usize>,
    pub rho: usize,
    /// The alternative's remaining conditions hold: `delta = 1` and
    /// transitivity on the projection for the complete code; `delta` in
    /// `{2,3}` and transitivity on levels 0 and 1 for radius one;
    /// transitivity on levels 0 to 2 otherwise. Transitivity is under
    /// `chi_J(X)`.
    pub clause_holds: bool,
}

/// Classifies `pi_J(C)` for every block `J` of an `X`-invariant partition.
pub fn projection_case(
    code: &Code,
    x: &GroupGens,
    partition: &EntryPartition,
    budgets: &Budgets,
) -> Result<Vec<ProjectionCase>> {
    x.params().ensure_same(code.params())?;
    if partition.m() != code.params().m() {
        return Err(HntError::param(format!(
            "partition is of {} entries, code has m={}",
            partition.m(),
            code.params().m()
        )));
    }
    if !partition.is_invariant_under(&x.entry_perms()) {
        return Err(HntError::NonInvariantPartition);
    }
    partition
        .blocks()
        .iter()
        .map(|block| classify_block(code, x, block, budgets))
        .collect()
}

fn classify_block(
    code: &Code,
    x: &GroupGens,
    block: &[usize],
    budgets: &Budgets,
) -> Result<ProjectionCase> {
    let projected = project_code(code, block)?;
    let chi = chi_gens(x, block)?;
    let partition = distance_partition(&projected, budgets.vertices)?;
    let rho = partition.covering_radius();
    let delta = match min_distance(&projected) {
        Ok(d) => Some(d),
        Err(HntError::UndefinedForSingleton) => None,
        Err(e) => return Err(e),
    };
    let (kind, s) = match rho {
        0 => (ProjectionKind::CompleteCode, 0),
        1 => (ProjectionKind::RadiusOneNT, 1),
        _ => (ProjectionKind::TwoNT, 2),
    };
    let report = report_from_partition(
        &chi,
        &projected,
        &partition,
        Some(s),
        budgets,
        Execution::default(),
    )?;
    let delta_ok = match kind {
        ProjectionKind::CompleteCode => delta == Some(1),
        ProjectionKind::RadiusOneNT => matches!(delta, Some(2 | 3)),
        ProjectionKind::TwoNT => true,
    };
    Ok(ProjectionCase {
        block: block.to_vec(),
        kind,
        projected_size: projected.len(),
        delta,
        rho,
        clause_holds: delta_ok && report.verdict,
    })
}
