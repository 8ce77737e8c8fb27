use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::equivalence::is_equivalent;
use crate::constructions::diag_full_group;
use crate::error::{HntError, Result};
use crate::exec::{self, Execution};
use crate::groups::{closure, stabilises, AutElem, EnumeratedGroup};
use crate::hamming::{distance_partition, Code, GraphParams, Symbol};
use crate::Budgets;

/// Largest `q^m` accepted by [`Strategy::AllSubsets`].
pub const ALL_SUBSETS_MAX_VERTICES: u64 = 12;
/// Largest `q!·m!` accepted by [`Strategy::SubgroupOrbits`].
pub const SUBGROUP_ORBITS_MAX_ORDER: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Every nonempty vertex subset is a candidate.
    AllSubsets,
    /// Vertex orbits of every subgroup of `Diag_m(S_q) ⋊ S_m`.
    SubgroupOrbits,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::AllSubsets => "all-subsets",
            Strategy::SubgroupOrbits => "subgroup-orbits",
        })
    }
}

impl FromStr for Strategy {
    type Err = HntError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-subsets" => Ok(Strategy::AllSubsets),
            "subgroup-orbits" => Ok(Strategy::SubgroupOrbits),
            _ => Err(HntError::param(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub m: usize,
    pub q: usize,
    pub strategy: Strategy,
    /// One representative per equivalence class, sorted by size and then by
    /// the lexicographically least word.
    pub codes: Vec<Code>,
    pub candidates: usize,
    /// Candidates passing the oracle before deduplication.
    pub positives: usize,
    /// Distinct subgroups found (subgroup-orbits only).
    pub subgroups: Option<usize>,
    /// Whether four-element generating sets found no subgroup beyond the
    /// three-element ones, which certifies that every subgroup was seen
    /// (subgroup-orbits only).
    pub generation_stable: Option<bool>,
    pub notes: Vec<String>,
}

/// All codes in `H(m,q)` that are diagonally `(X,2)`-neighbour transitive
/// for some `X`, up to equivalence.
///
/// The oracle: `G_C`, the stabiliser of `C` in `G = Diag_m(S_q) ⋊ S_m`, is
/// transitive on `C_0`, `C_1` and `C_2`, and `rho >= 2`. Any witness `X`
/// lies in `G_C`, and `G_C` is itself a witness.
pub fn classify_diagonal_2nt(
    m: usize,
    q: usize,
    strategy: Strategy,
    budgets: &Budgets,
) -> Result<Classification> {
    classify_with(m, q, strategy, budgets, Execution::default())
}

pub fn classify_with(
    m: usize,
    q: usize,
    strategy: Strategy,
    budgets: &Budgets,
    exec: Execution,
) -> Result<Classification> {
    let params = GraphParams::new(m, q)?;
    let order = diag_order(m, q);
    if strategy == Strategy::SubgroupOrbits && order.map_or(true, |n| n > SUBGROUP_ORBITS_MAX_ORDER)
    {
        return Err(HntError::param(format!(
            "subgroup-orbits needs q!*m! <= {SUBGROUP_ORBITS_MAX_ORDER}, got {q}!*{m}!"
        )));
    }
    if strategy == Strategy::AllSubsets && params.vertex_count() > ALL_SUBSETS_MAX_VERTICES {
        return Err(HntError::param(format!(
            "all-subsets needs q^m <= {ALL_SUBSETS_MAX_VERTICES}, got {}",
            params.vertex_count()
        )));
    }
    let g = diag_full_group(m, q)?.enumerate(budgets.elements)?;
    let (candidates, positives, subgroups, generation_stable) = match strategy {
        Strategy::AllSubsets => {
            let n = params.vertex_count();
            let found = exec::filter_map_range(exec, 1..1 << n, |mask| {
                let code = Code::from_sorted_unchecked(
                    params,
                    (0..n).filter(|i| mask >> i & 1 == 1).collect(),
                );
                match passes_oracle(&g, &code, budgets) {
                    Ok(true) => Some(Ok(code)),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            });
            let positives = found.into_iter().collect::<Result<Vec<_>>>()?;
            ((1usize << n) - 1, positives, None, None)
        }
        Strategy::SubgroupOrbits => {
            let (subs, stable) = all_subgroups(&g, budgets)?;
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            for h in &subs {
                for orbit in vertex_orbits(params, h) {
                    seen.insert(orbit);
                }
            }
            let mut all: Vec<Vec<u64>> = seen.into_iter().collect();
            all.sort();
            let codes: Vec<Code> = all
                .into_iter()
                .map(|w| Code::from_sorted_unchecked(params, w))
                .collect();
            let verdicts = exec::map(exec, &codes, |c| passes_oracle(&g, c, budgets));
            let mut positives = Vec::new();
            for (c, v) in codes.iter().zip(verdicts) {
                if v? {
                    positives.push(c.clone());
                }
            }
            (codes.len(), positives, Some(subs.len()), Some(stable))
        }
    };
    let mut positives = positives;
    let n_pos = positives.len();
    positives.sort_by_cached_key(sort_key);
    let mut codes: Vec<Code> = Vec::new();
    for c in positives {
        let mut fresh = true;
        for r in &codes {
            if is_equivalent(r, &c, budgets)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            codes.push(c);
        }
    }
    let mut notes = Vec::new();
    if q >= 3 {
        notes.push("single codewords are rejected for q >= 3: C_2 splits by whether the two changed symbols agree".into());
    }
    if generation_stable == Some(false) {
        notes.push(
            "a fourth generator still produced new subgroups; candidate list may be incomplete"
                .into(),
        );
    }
    Ok(Classification {
        m,
        q,
        strategy,
        codes,
        candidates,
        positives: n_pos,
        subgroups,
        generation_stable,
        notes,
    })
}

/// `q!·m!`, the order of `Diag_m(S_q) ⋊ S_m`.
fn diag_order(m: usize, q: usize) -> Option<u64> {
    let fact = |n: usize| (1..=n as u64).try_fold(1u64, |a, b| a.checked_mul(b));
    fact(q)?.checked_mul(fact(m)?)
}

/// The oracle on a single code; `g` must be all of `Diag_m(S_q) ⋊ S_m`.
pub fn passes_oracle(g: &EnumeratedGroup, code: &Code, budgets: &Budgets) -> Result<bool> {
    let partition = distance_partition(code, budgets.vertices)?;
    if partition.covering_radius() < 2 {
        return Ok(false);
    }
    let gc: Vec<&AutElem> = g
        .elements()
        .iter()
        .filter(|x| stabilises(x, code))
        .collect();
    Ok((0..=2).all(|r| {
        let cell = partition.cell(r);
        let orbit: HashSet<u64> = gc.iter().map(|x| x.apply_index(cell[0])).collect();
        orbit.len() == cell.len()
    }))
}

/// Size, then the sorted symbol tuples.
fn sort_key(c: &Code) -> (usize, Vec<Vec<Symbol>>) {
    let mut words: Vec<Vec<Symbol>> = c.words().map(|w| w.symbols().to_vec()).collect();
    words.sort();
    (c.len(), words)
}

/// Every subgroup generated by at most four elements, as sorted element
/// lists, plus whether the fourth generator added nothing new. If it did
/// not, no larger generating set can either, so the list is complete.
fn all_subgroups(g: &EnumeratedGroup, budgets: &Budgets) -> Result<(Vec<Vec<AutElem>>, bool)> {
    let params = g.params();
    // sorted elements -> a generating set
    let mut found: HashMap<Vec<AutElem>, Vec<AutElem>> = HashMap::new();
    let mut cyclic: Vec<AutElem> = Vec::new();
    for x in g.elements() {
        let els = closure(
            params,
            std::slice::from_ref(x),
            budgets.elements,
            Execution::Sequential,
        )?;
        if let std::collections::hash_map::Entry::Vacant(e) = found.entry(els) {
            e.insert(vec![x.clone()]);
            cyclic.push(x.clone());
        }
    }
    let mut layer: Vec<(Vec<AutElem>, Vec<AutElem>)> =
        found.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let mut counts = Vec::new();
    for _ in 2..=4 {
        let mut next = Vec::new();
        for (base, gens) in &layer {
            for c in &cyclic {
                if base.binary_search(c).is_ok() {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(c.clone());
                let els = closure(params, &joined, budgets.elements, Execution::Sequential)?;
                if !found.contains_key(&els) {
                    found.insert(els.clone(), joined.clone());
                    next.push((els, joined));
                }
            }
        }
        counts.push(found.len());
        layer = next;
    }
    let mut subs: Vec<Vec<AutElem>> = found.into_keys().collect();
    subs.sort();
    Ok((subs, counts[1] == counts[2]))
}

/// Orbits of a listed group on all vertices, each sorted.
fn vertex_orbits(params: GraphParams, elements: &[AutElem]) -> Vec<Vec<u64>> {
    let n = params.vertex_count();
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for v in 0..n {
        if seen[v as usize] {
            continue;
        }
        let mut orbit: Vec<u64> = elements.iter().map(|x| x.apply_index(v)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &w in &orbit {
            seen[w as usize] = true;
        }
        out.push(orbit);
    }
    out
}
