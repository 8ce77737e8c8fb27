use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::equivalence::{code_automorphisms, is_equivalent};
use crate::analysis::nt::analyze;
use crate::constructions::rep;
use crate::error::{HntError, Result};
use crate::groups::AutElem;
use crate::hamming::{index_distance, Code, GraphParams};
use crate::Budgets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeskSearchReport {
    pub m: usize,
    pub q: usize,
    /// Codes with `delta >= 3` through the two seed words, by size.
    pub codes_by_size: BTreeMap<usize, usize>,
    pub codes: usize,
    /// Codes whose automorphism group is an alphabet-almost-simple 2-NT
    /// witness with non-trivial kernel.
    pub qualifying: usize,
    pub qualifying_sizes: Vec<usize>,
    /// Every qualifying code is equivalent to `Rep(m,q)`.
    pub all_equivalent_to_rep: bool,
    pub search_nodes: u64,
}

/// Enumerates every code in `H(m,q)` with minimum distance at least 3 that
/// contains `(0,...,0)` and `(1,...,1)`, and tests each for an
/// alphabet-almost-simple `(X,2)`-neighbour-transitive witness `X` with
/// `X ∩ B != 1`.
///
/// The property passes from `X` to any overgroup inside `Aut(C)` when `q = 5`
/// (the only subgroups of `S_5` containing `A_5` are `A_5` and `S_5`), so it
/// is enough to test `Aut(C)` itself. For other `q` only `X = Aut(C)` is
/// tested.
pub fn desk_search(m: usize, q: usize, budgets: &Budgets) -> Result<DeskSearchReport> {
    if m < 3 {
        return Err(HntError::param("the desk search needs m >= 3"));
    }
    let params = GraphParams::new(m, q)?;
    params.ensure_vertex_budget(budgets.vertices)?;
    let zero = 0u64;
    let ones: u64 = (0..m).map(|i| params.weight(i)).sum();
    let far = |a: u64, b: u64| index_distance(params, a, b) >= 3;
    let pool: Vec<u64> = (0..params.vertex_count())
        .filter(|&v| far(v, zero) && far(v, ones))
        .collect();

    let mut cliques: Vec<Vec<u64>> = Vec::new();
    let mut nodes = 0u64;
    let mut current = vec![zero, ones];
    extend(
        &pool,
        0,
        &mut current,
        &mut cliques,
        &mut nodes,
        budgets.search_nodes,
        &far,
    )?;

    let rep_code = rep(m, q)?;
    let mut codes_by_size = BTreeMap::new();
    let mut qualifying_sizes = Vec::new();
    let mut all_equivalent_to_rep = true;
    for words in &cliques {
        let code = Code::collect_indices(params, words.clone())?;
        *codes_by_size.entry(code.len()).or_insert(0) += 1;
        if qualifies(&code, budgets)? {
            qualifying_sizes.push(code.len());
            if is_equivalent(&code, &rep_code, budgets)?.is_none() {
                all_equivalent_to_rep = false;
            }
        }
    }
    Ok(DeskSearchReport {
        m,
        q,
        codes: cliques.len(),
        codes_by_size,
        qualifying: qualifying_sizes.len(),
        qualifying_sizes,
        all_equivalent_to_rep,
        search_nodes: nodes,
    })
}

fn extend(
    pool: &[u64],
    from: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    nodes: &mut u64,
    budget: u64,
    far: &impl Fn(u64, u64) -> bool,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(HntError::Budget {
            what: "clique search",
            budget,
            needed: *nodes,
        });
    }
    out.push(current.clone());
    for i in from..pool.len() {
        let v = pool[i];
        if current.iter().all(|&w| far(v, w)) {
            current.push(v);
            extend(pool, i + 1, current, out, nodes, budget, far)?;
            current.pop();
        }
    }
    Ok(())
}

/// `Aut(C)` is 2-NT, transitive on entries, has non-trivial kernel and an
/// almost simple alphabet group.
pub fn qualifies(code: &Code, budgets: &Budgets) -> Result<bool> {
    let aut = code_automorphisms(code, budgets)?;
    if !aut
        .elements()
        .iter()
        .any(|x: &AutElem| x.is_base() && !x.is_identity())
    {
        return Ok(false);
    }
    let report = match analyze(aut.gens(), code, Some(2), budgets) {
        Ok(r) => r,
        Err(HntError::LevelExceedsCoveringRadius { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(report.is_alphabet_almost_simple_nt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_qualifies_and_pair_does_not() {
        let b = Budgets::default();
        assert!(qualifies(&rep(3, 5).unwrap(), &b).unwrap());
        let p = GraphParams::new(3, 5).unwrap();
        let pair = Code::from_indices(p, vec![0, 31]).unwrap();
        assert!(!qualifies(&pair, &b).unwrap());
    }

    #[test]
    fn clique_counts_in_h34() {
        // seeds 000 and 111; the rest use symbols {2,3} in every entry, and
        // two such words are at distance 3 only if complementary
        let r = desk_search(3, 4, &Budgets::default()).unwrap();
        assert_eq!(r.codes_by_size.get(&2), Some(&1));
        assert_eq!(r.codes_by_size.get(&3), Some(&8));
        assert_eq!(r.codes_by_size.get(&4), Some(&4));
        assert_eq!(r.codes, 13);
    }
}
