use serde::{Deserialize, Serialize};

use crate::error::{HntError, Result};
use crate::exec::Execution;
use crate::groups::GroupGens;
use crate::hamming::{distance_partition_with, min_distance, Code, DistancePartition};
use crate::Budgets;

/// Transitivity verdict for one cell `C_r` of the distance partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub r: usize,
    pub size: usize,
    pub transitive: bool,
}

/// Result of an `(X,s)`-neighbour-transitivity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtReport {
    pub m: usize,
    pub q: usize,
    pub code_size: usize,
    /// `None` for a single codeword.
    pub delta: Option<usize>,
    pub rho: usize,
    /// Levels `0..=s`.
    pub levels: Vec<LevelReport>,
    pub diagonal: bool,
    pub entry_transitive: bool,
    /// Order of `X_0^Q`; `None` if it could not be enumerated in budget.
    pub alphabet_group_order: Option<usize>,
    pub almost_simple: Option<bool>,
    /// `X` is transitive on every reported level.
    pub verdict: bool,
}

impl NtReport {
    pub fn is_diagonally_nt(&self) -> bool {
        self.verdict && self.diagonal
    }

    pub fn is_alphabet_almost_simple_nt(&self) -> bool {
        self.verdict && self.entry_transitive && self.almost_simple == Some(true)
    }
}

/// Checks transitivity of `X` on `C_0, ..., C_s`.
///
/// `s` beyond the covering radius is an error rather than vacuous truth.
pub fn is_s_neighbour_transitive(
    x: &GroupGens,
    code: &Code,
    s: usize,
    budgets: &Budgets,
) -> Result<NtReport> {
    analyze_with(x, code, Some(s), budgets, Execution::default())
}

/// `is_s_neighbour_transitive` with `s = rho`.
pub fn is_completely_transitive(x: &GroupGens, code: &Code, budgets: &Budgets) -> Result<bool> {
    Ok(analyze_with(x, code, None, budgets, Execution::default())?.verdict)
}

/// `(X,s)`-NT with every generator of `X` in `Diag_m(S_q) ⋊ S_m`.
pub fn is_diagonally_nt(x: &GroupGens, code: &Code, s: usize, budgets: &Budgets) -> Result<bool> {
    if !x.is_diagonal() {
        return Ok(false);
    }
    Ok(is_s_neighbour_transitive(x, code, s, budgets)?.verdict)
}

/// `(X,s)`-NT, transitive on entries, and `X_0^Q` almost simple.
pub fn is_alphabet_almost_simple_nt(
    x: &GroupGens,
    code: &Code,
    s: usize,
    budgets: &Budgets,
) -> Result<bool> {
    let report = is_s_neighbour_transitive(x, code, s, budgets)?;
    if report.verdict && report.entry_transitive && report.almost_simple.is_none() {
        // the alphabet group is needed for the answer, so surface the budget
        x.alphabet_group(0, budgets.elements)?;
    }
    Ok(report.is_alphabet_almost_simple_nt())
}

/// Full report; `s = None` means up to the covering radius.
pub fn analyze(
    x: &GroupGens,
    code: &Code,
    s: Option<usize>,
    budgets: &Budgets,
) -> Result<NtReport> {
    analyze_with(x, code, s, budgets, Execution::default())
}

pub fn analyze_with(
    x: &GroupGens,
    code: &Code,
    s: Option<usize>,
    budgets: &Budgets,
    exec: Execution,
) -> Result<NtReport> {
    x.params().ensure_same(code.params())?;
    let partition = distance_partition_with(code, budgets.vertices, exec)?;
    report_from_partition(x, code, &partition, s, budgets, exec)
}

pub(crate) fn report_from_partition(
    x: &GroupGens,
    code: &Code,
    partition: &DistancePartition,
    s: Option<usize>,
    budgets: &Budgets,
    exec: Execution,
) -> Result<NtReport> {
    let rho = partition.covering_radius();
    let s = s.unwrap_or(rho);
    if s > rho {
        return Err(HntError::LevelExceedsCoveringRadius { s, rho });
    }
    let mut levels = Vec::with_capacity(s + 1);
    for r in 0..=s {
        let cell = partition
            .cell_code(r)
            .expect("levels up to rho are nonempty");
        levels.push(LevelReport {
            r,
            size: cell.len(),
            transitive: x.is_transitive_on_with(&cell, exec)?,
        });
    }
    let alphabet = match x.alphabet_group(0, budgets.elements) {
        Ok(g) => Some(g),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let delta = match min_distance(code) {
        Ok(d) => Some(d),
        Err(HntError::UndefinedForSingleton) => None,
        Err(e) => return Err(e),
    };
    Ok(NtReport {
        m: code.params().m(),
        q: code.params().q(),
        code_size: code.len(),
        delta,
        rho,
        verdict: levels.iter().all(|l| l.transitive),
        levels,
        diagonal: x.is_diagonal(),
        entry_transitive: x.is_transitive_on_entries(),
        alphabet_group_order: alphabet.as_ref().map(|g| g.order()),
        almost_simple: alphabet.as_ref().map(|g| g.is_almost_simple()),
    })
}
